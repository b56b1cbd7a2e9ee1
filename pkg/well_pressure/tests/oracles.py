"""Independent numerical oracles used only by the test suite."""
import math


def bisect_root(f, lower, upper, tol=1e-14, max_iterations=200):
    """Plain bisection on a sign-changing bracket."""
    f_lower = f(lower)
    for _ in range(max_iterations):
        middle = 0.5 * (lower + upper)
        f_middle = f(middle)
        if f_middle == 0.0 or 0.5 * (upper - lower) < tol:
            return middle
        if math.copysign(1.0, f_middle) == math.copysign(1.0, f_lower):
            (lower, f_lower) = (middle, f_middle)
        else:
            upper = middle
    return 0.5 * (lower + upper)


def adaptive_simpson(f, a, b, tol=1e-12, max_depth=50):
    """Adaptive Simpson quadrature with an absolute tolerance."""
    if a == b:
        return 0.0

    def simpson(fa, fm, fb, h):
        return h / 3.0 * (fa + 4.0 * fm + fb)

    def recurse(a, b, fa, fm, fb, whole, tol, depth):
        m = 0.5 * (a + b)
        h = 0.5 * (b - a)
        lm = 0.5 * (a + m)
        rm = 0.5 * (m + b)
        flm = f(lm)
        frm = f(rm)
        left = simpson(fa, flm, fm, 0.5 * h)
        right = simpson(fm, frm, fb, 0.5 * h)
        error = (left + right - whole) / 15.0
        if depth >= max_depth or abs(error) < tol:
            return left + right + error
        return (
            recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1)
            + recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1)
        )

    fa = f(a)
    fb = f(b)
    fm = f(0.5 * (a + b))
    whole = simpson(fa, fm, fb, 0.5 * (b - a))
    return recurse(a, b, fa, fm, fb, whole, tol, 0)


def central_difference(f, x, h):
    return (f(x + h) - f(x - h)) / (2.0 * h)
