"""Pure-Python coefficient-vector kernels for dense polynomials over F_p.

Polynomials are lists of residues in [0, p), lowest degree first, with no
trailing zeros ([] is the zero polynomial).  The compiled backend in
_cypoly mirrors these functions exactly; both are interchangeable.
"""

BACKEND = "python"


def mul(a: list, b: list, p: int) -> list:
    if not a or not b:
        return []
    if len(a) > len(b):
        a, b = b, a
    c = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                c[i + j] += ai * bj
    for i in range(len(c)):
        c[i] %= p
    return c


def div_rem(a: list, b: list, p: int) -> tuple[list, list]:
    nb = len(b)
    if nb == 0:
        raise ZeroDivisionError("division by zero polynomial")
    na = len(a)
    if na < nb:
        return [], list(a)
    r = list(a)
    q = [0] * (na - nb + 1)
    binv = pow(b[-1], -1, p)
    for i in range(na - nb, -1, -1):
        top = r[i + nb - 1]
        if top:
            qi = top * binv % p
            q[i] = qi
            for j in range(nb - 1):
                r[i + j] = (r[i + j] - qi * b[j]) % p
            r[i + nb - 1] = 0
    del r[nb - 1 :]
    while r and not r[-1]:
        r.pop()
    return q, r


def rem(a: list, b: list, p: int) -> list:
    nb = len(b)
    if nb == 0:
        raise ZeroDivisionError("division by zero polynomial")
    na = len(a)
    if na < nb:
        return list(a)
    r = list(a)
    binv = pow(b[-1], -1, p)
    for i in range(na - nb, -1, -1):
        top = r[i + nb - 1]
        if top:
            qi = top * binv % p
            for j in range(nb - 1):
                r[i + j] = (r[i + j] - qi * b[j]) % p
            r[i + nb - 1] = 0
    del r[nb - 1 :]
    while r and not r[-1]:
        r.pop()
    return r


def mul_mod(a: list, b: list, m: list, p: int) -> list:
    return rem(mul(a, b, p), m, p)


def pow_mod(base: list, exp: int, m: list, p: int) -> list:
    if len(m) == 0:
        raise ZeroDivisionError("division by zero polynomial")
    if exp < 0:
        raise ValueError("negative exponent")
    if len(m) == 1:
        return []
    if exp == 0:
        return [1]
    b = rem(base, m, p)
    r = [1]
    for bit in bin(exp)[2:]:
        r = rem(mul(r, r, p), m, p)
        if bit == "1":
            r = rem(mul(r, b, p), m, p)
    return r


def gcd(a: list, b: list, p: int) -> list:
    a, b = list(a), list(b)
    while b:
        a, b = b, rem(a, b, p)
    if a and a[-1] != 1:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a
