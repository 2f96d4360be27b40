from cyclolab.exceptions import InvalidArgument
from .element import CycloElem
from .lambdaadic import v_pi, p_adic_order


def _floor_log(n: int, p: int) -> int:
    e = 0
    while n >= p:
        n //= p
        e += 1
    return e


def logarithm(x: CycloElem) -> CycloElem:
    """
    pi-adic logarithm of x = 1 mod pi

    The series sum (-1)^{n+1} y^n / n, y = x - 1, is summed up to the first n
    past which every term vanishes mod pi^{a(p-1)}. Powers of y are carried
    floor(log_p n) extra p-digits so the divisions by p | n stay exact.

    Parameters
    ----------
    x : CycloElem
        principal unit

    Returns
    -------
    CycloElem
        log(x) at the precision of x
    """
    p, a = x.p, x.a
    y = x - 1
    v0 = v_pi(y)
    if v0 is None:
        return CycloElem.zero(p, a)
    if v0 < 1:
        raise InvalidArgument('logarithm needs x = 1 mod pi')
    cap = x.cap
    n_max = 1
    while n_max * v0 < cap + (p - 1) * (_floor_log(n_max, p) + 1):
        n_max += 1
    extra = _floor_log(n_max, p)
    work = y.with_precision(a + extra)
    term = CycloElem.one(p, a + extra)
    total = CycloElem.zero(p, a)
    for n in range(1, n_max):
        term = term * work
        e = p_adic_order(n, p)
        if n * v0 - (p - 1) * e >= cap:
            continue
        piece = CycloElem(p, a + extra - e, tuple(c // p ** e for c in term.coeffs)).with_precision(a)
        scale = pow(n // p ** e, -1, p ** a)
        total = total + piece * (scale if n % 2 else -scale)
    return total


def exponential(z: CycloElem) -> CycloElem:
    """
    pi-adic exponential of z with v_pi(z) >= 2

    Parameters
    ----------
    z : CycloElem

    Returns
    -------
    CycloElem
        exp(z) = 1 mod pi^2 at the precision of z
    """
    p, a = z.p, z.a
    v0 = v_pi(z)
    if v0 is None:
        return CycloElem.one(p, a)
    if v0 < 2:
        raise InvalidArgument('exponential needs v_pi(z) >= 2')
    cap = z.cap
    # v(z^n / n!) >= n (v0 - 1) + 1
    n_max = 1
    while n_max * (v0 - 1) + 1 < cap:
        n_max += 1
    extra = sum(p_adic_order(n, p) for n in range(p, n_max, p))
    work = z.with_precision(a + extra)
    term = CycloElem.one(p, a + extra)
    total = CycloElem.one(p, a)
    for n in range(1, n_max):
        term = term * work
        e = p_adic_order(n, p)
        if e:
            term = CycloElem(p, term.a - e, tuple(c // p ** e for c in term.coeffs))
        term = term * pow(n // p ** e, -1, p ** term.a)
        total = total + term.with_precision(a)
    return total
