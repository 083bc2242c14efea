# Single sign-on: c authenticates with identity provider ip, which tells
# the service s and the client c whether to proceed.
main {
  c.credentials -> ip.x;
  if ip.x == secret then {
    ip -> s[left];
    ip -> c[left];
    s.token -> c.t;
    end
  } else {
    ip -> s[right];
    ip -> c[right];
    end
  }
}
