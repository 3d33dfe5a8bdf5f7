import itertools

import pytest


def principal_vertex_fibonacci(bits, a, b):
    """Reference evaluation by principal-vertex indices.

    Tunnel ``tau_k`` has principal vertex ``{tau_i, tau_{k-1}, tau_k}``.
    ``s_k = 1`` means the vertex is ``{tau_{k-2}, tau_{k-1}, tau_k}``;
    ``s_k = 0`` means ``tau_i`` is the same older tunnel as for
    ``tau_{k-1}``.  Then ``b_k = b_i + b_{k-1}``.
    """
    m = len(bits) - len(bits.lstrip("0")) + 2
    n = len(bits) + 2
    b_vals = {m - 2: a, m - 1: b}
    older = {}
    for k in range(m, n):
        s_k = int(bits[k - 2])
        if s_k == 1:
            older[k] = k - 2
        else:
            older[k] = older[k - 1]
        b_vals[k] = b_vals[older[k]] + b_vals[k - 1]
    return [b_vals[k] for k in range(m - 2, n)]


@pytest.fixture(scope="session")
def words_up_to():
    def gen(max_len):
        for length in range(max_len + 1):
            for bits in itertools.product("01", repeat=length):
                yield "".join(bits)
    return gen
