"""Verification sweeps shared by the test suite and the command line.

Each function exhaustively checks one family of identities over graded
basis states and returns a list of human-readable failure strings; an
empty list means every instance held exactly.  Ranges are parameters so
callers can trade coverage for time; the defaults are sized for an
interactive run.
"""

from fractions import Fraction

from .basis import enumerate_basis, enumerate_full, split_by_s
from .chart import ChartFn, metric_data
from .freefield import (VACUUM, _prod_mono, binomial, mon_charge, mon_parity,
                        mon_str, mon_weight, normalize, nth_product, sadd,
                        sscale, state_str, translate, B, C, GAMMA)
from .scalar import I


def _family(kmax, dmax):
    mons = []
    for k in range(kmax + 1):
        for l in range(-(k + 2), k + 3):
            mons.extend(enumerate_full(k, l, dmax))
    return mons


def _fail(fails, what, lhs, rhs):
    fails.append("%s: lhs = %s, rhs = %s" % (what, state_str(lhs), state_str(rhs)))


def vacuum_failures(amax=3, dmax=2, nbound=3):
    """a_(n)|0> = 0 for n >= 0 and a_(-1)|0> = a."""
    fails = []
    for am in _family(amax, dmax):
        a = {am: 1}
        for n in range(0, nbound + 1):
            got = nth_product(a, n, VACUUM)
            if got:
                _fail(fails, "vacuum: %s_(%d)|0>" % (mon_str(am), n), got, {})
        got = nth_product(a, -1, VACUUM)
        if got != a:
            _fail(fails, "vacuum: %s_(-1)|0>" % mon_str(am), got, a)
    return fails


def translation_failures(amax=3, xmax=2, adeg=2, xdeg=1, nbound=3):
    """(translate a)_(n) = -n a_(n-1) as operators."""
    fails = []
    X = _family(xmax, xdeg)
    for am in _family(amax, adeg):
        ta = translate({am: 1})
        for xm in X:
            x = {xm: 1}
            for n in range(-nbound, nbound + 1):
                lhs = nth_product(ta, n, x)
                rhs = sscale(nth_product({am: 1}, n - 1, x), -n)
                if lhs != rhs:
                    _fail(fails, "translation: (T %s)_(%d) %s"
                          % (mon_str(am), n, mon_str(xm)), lhs, rhs)
    return fails


def normalization_failures():
    """normalize is idempotent and odd transpositions flip the sign."""
    fails = []
    swapped = normalize([(C, -1), (B, -1)])
    expected = {((B, -1), (C, -1)): -1}
    if swapped != expected:
        _fail(fails, "normalization: odd swap", swapped, expected)
    if normalize([(B, -1), (B, -1)]):
        _fail(fails, "normalization: odd square", normalize([(B, -1), (B, -1)]), {})
    even = normalize([(GAMMA, -2), (GAMMA, -2), (B, -3)])
    key = next(iter(even))
    if normalize(list(key)) != even:
        _fail(fails, "normalization: idempotence", normalize(list(key)), even)
    return fails


def _graded(state):
    """(k, l) if homogeneous, None on the empty state, raise on mixed."""
    grades = {(mon_weight(m), mon_charge(m)) for m in state}
    if not grades:
        return None
    if len(grades) > 1:
        raise AssertionError("inhomogeneous product %s" % state_str(state))
    return grades.pop()


def commutator_failures(blocks=((2, 2, 1, 0), (1, 1, 1, 1)), nbound=3,
                        check_grading=True):
    """The commutator formula

        a_(m)(b_(n)x) - (-1)^{|a||b|} b_(n)(a_(m)x)
            = sum_j C(m, j) (a_(j)b)_(m+n-j) x

    for all m, n with |m|, |n| <= nbound.  Each block (amax, bmax, xmax,
    dmax) sweeps basis triples with weight(a) <= amax, weight(b) <= bmax,
    weight(x) <= xmax, all at gamma_(-1)-degree <= dmax.  Grading
    additivity of every nonzero product a_(j)b is checked alongside.
    """
    fails = []
    span = range(-nbound, nbound + 1)
    for amax, bmax, xmax, dmax in blocks:
        A, B_, X = _family(amax, dmax), _family(bmax, dmax), _family(xmax, dmax)
        for am in A:
            wa, la, pa = mon_weight(am), mon_charge(am), mon_parity(am)
            a = {am: 1}
            for bm in B_:
                wb, lb, pb = mon_weight(bm), mon_charge(bm), mon_parity(bm)
                b = {bm: 1}
                sign = -1 if pa & pb else 1
                prods = []
                j = 0
                while wa + wb - j - 1 >= 0:
                    pj = nth_product(a, j, b)
                    if check_grading and pj:
                        if _graded(pj) != (wa + wb - j - 1, la + lb):
                            _fail(fails, "grading: %s_(%d)%s"
                                  % (mon_str(am), j, mon_str(bm)), pj, {})
                    prods.append(pj)
                    j += 1
                jprods = [(j, pj) for j, pj in enumerate(prods) if pj]
                for xm in X:
                    wx = mon_weight(xm)
                    ys = {n: _prod_mono(bm, n, xm) for n in span}
                    for m in span:
                        amx = _prod_mono(am, m, xm)
                        binoms = [binomial(m, j) for j, _ in jprods]
                        for n in span:
                            if wa + wb + wx - m - n - 2 < 0:
                                continue
                            diff = {}
                            for ym, cy in ys[n].items():
                                sadd(diff, _prod_mono(am, m, ym), cy)
                            for zm, cz in amx.items():
                                sadd(diff, _prod_mono(bm, n, zm), -sign * cz)
                            for (j, pj), cj in zip(jprods, binoms):
                                if cj:
                                    for pm, cp in pj.items():
                                        sadd(diff, _prod_mono(pm, m + n - j, xm),
                                             -cj * cp)
                            if diff:
                                lhs = nth_product({am: 1}, m,
                                                  nth_product({bm: 1}, n, {xm: 1}))
                                sadd(lhs, nth_product({bm: 1}, n, amx), -sign)
                                rhs = {}
                                for (j, pj), cj in zip(jprods, binoms):
                                    sadd(rhs, nth_product(pj, m + n - j, {xm: 1}), cj)
                                _fail(fails, "commutator: [%s_(%d), %s_(%d)] %s"
                                      % (mon_str(am), m, mon_str(bm), n,
                                         mon_str(xm)), lhs, rhs)
    return fails


ENGINE_CLI = {
    "amax": 2, "xmax": 1, "adeg": 1, "xdeg": 1, "nbound": 2,
    "blocks": ((2, 2, 1, 0), (1, 1, 1, 1)),
}
# widest sweep fitting the one-minute budget on a single core; the
# plain product of the per-role weight caps does not
ENGINE_FULL = {
    "amax": 3, "xmax": 2, "adeg": 2, "xdeg": 1, "nbound": 3,
    "blocks": ((2, 2, 2, 0), (3, 1, 1, 0), (1, 1, 1, 2)),
}


def engine_failures(amax=2, xmax=1, adeg=1, xdeg=1, nbound=2,
                    blocks=((2, 2, 1, 0), (1, 1, 1, 1))):
    fails = []
    fails += vacuum_failures(amax, adeg, nbound)
    fails += normalization_failures()
    fails += translation_failures(amax, xmax, adeg, xdeg, nbound)
    fails += commutator_failures(blocks, nbound)
    return fails


def emptiness_failures(kmax=5):
    """split_by_s blocks [k, l, s] with k < |s| are empty, and every s
    with |s| <= k is hit by some charge."""
    fails = []
    for k in range(kmax + 1):
        seen = set()
        for l in range(-(k + 2), k + 3):
            blocks = split_by_s(enumerate_basis(k, l))
            for s, mons in blocks.items():
                if k < abs(s) and mons:
                    fails.append("emptiness: [%d,%d,%d] nonempty: %s"
                                 % (k, l, s, mon_str(mons[0])))
                if mons:
                    seen.add(s)
        for s in range(-k, k + 1):
            if s not in seen:
                fails.append("emptiness: no block with s=%d at weight %d" % (s, k))
    return fails


def sl2_failures(kmax=3, dmax=2, kernel_kmax=4):
    from . import sl2
    fails = []
    for (i, k, l, mon) in sl2.verify_relationL(kmax, dmax):
        fails.append("relationL i=%d fails on %s at (%d,%d)"
                     % (i, mon_str(mon), k, l))
    for (i, j, k, l, mon) in sl2.verify_sl2_bracket(kmax, dmax):
        fails.append("bracket [L(%d),L(%d)] fails on %s at (%d,%d)"
                     % (i, j, mon_str(mon), k, l))
    for k in range(kernel_kmax + 1):
        for l in range(-(k + 2), k + 3):
            try:
                inv = sl2.invariants(k, l, check=True)
            except ArithmeticError as exc:
                fails.append("kernel routes disagree at (%d,%d): %s" % (k, l, exc))
                continue
            for st in inv.states:
                if any((GAMMA, -1) in mon for mon in st):
                    fails.append("kernel vector at (%d,%d) is not gamma_(-1)-free: %s"
                                 % (k, l, state_str(st)))
    if len(sl2.invariants(0, 0).states) != 1:
        fails.append("dim W^T[0,0] != 1")
    if sl2.invariants(0, 1).states:
        fails.append("dim W^T[0,1] != 0")
    fails += emptiness_failures()
    return fails


def geometry_failures(kmax=2, case3_kmax=3):
    from . import geometry as geo
    from .basis import basis_block, mon_scount
    fails = []
    md = metric_data()
    if md.h != ChartFn.v_pow(-2, I * (-2)):
        fails.append("metric: H != -2i v^-2: %r" % md.h)
    if md.h * md.h_inv != ChartFn.const(1):
        fails.append("metric: H Hinv != 1")
    if md.theta_coeff != ChartFn.v_pow(-1, -2):
        fails.append("metric: theta coefficient != -2 v^-1: %r" % md.theta_coeff)
    if md.b0_theta != I:
        fails.append("metric: B_(0) theta != i: %r" % md.b0_theta)
    one = ChartFn.const(1)
    for k in range(kmax + 1):
        for l in range(-(k + 2), k + 3):
            for mon in enumerate_basis(k, l):
                s = mon_scount(mon)
                sec = geo.FormSection(deg0={mon: ChartFn.v_pow(1)})
                for op, ds in ((geo.f1, -1), (geo.f2, -2)):
                    for m2 in op(sec).deg1:
                        got = (mon_weight(m2), mon_charge(m2), mon_scount(m2))
                        if got != (k, l, s + ds):
                            fails.append("grading: F drops s wrongly on %s" % mon_str(mon))
                plain = geo.FormSection(deg0={mon: one})
                if geo.curvature_op(plain) != plain.scale(l - s):
                    fails.append("curvature != (l-s) id on %s" % mon_str(mon))
                if l - s in (1, 2):
                    try:
                        chain = geo.solve_recursion(geo.seed_section(mon))
                    except (ValueError, ArithmeticError) as exc:
                        fails.append("recursion failed on %s: %s" % (mon_str(mon), exc))
                        continue
                    if len(chain) - 1 > k + s + 1:
                        fails.append("recursion too long on %s" % mon_str(mon))
                    for t, res in enumerate(geo.chain_residuals(chain)):
                        if res:
                            fails.append("recursion identity t=%d fails on %s: %r"
                                         % (t, mon_str(mon), res))
                    total = geo.FormSection()
                    for a in chain:
                        total = total + a
                    if geo.dbar_total(total):
                        fails.append("Dbar(sum) != 0 on %s" % mon_str(mon))
    for k in range(case3_kmax + 1):
        for s in range(-k, k + 1):
            for mon in basis_block(k, s, s):
                sec = geo.FormSection(deg0={mon: one})
                if geo.f2(sec):
                    fails.append("F2(A (x) 1) != 0 on %s" % mon_str(mon))
                if geo.dbar_prime(sec):
                    fails.append("dbar_prime(A (x) 1) != 0 on %s" % mon_str(mon))
            try:
                geo.case3_kernel(k, s)
            except ArithmeticError as exc:
                fails.append("case-3 kernel check failed at (%d,%d): %s" % (k, s, exc))
    return fails
