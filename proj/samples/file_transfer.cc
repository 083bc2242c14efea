# The server resends a file with its checksum until the client accepts it.
def FileTransfer(c, s) {
  s.(file, check) -> c.x;
  if c.succ(fst(x)) == snd(x) then {
    c -> s[left];
    end
  } else {
    c -> s[right];
    call FileTransfer
  }
}

main {
  call FileTransfer
}
