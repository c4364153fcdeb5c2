"""Scratch verification of derived values before freezing tests."""
import sys

sys.path.insert(0, "src")
from fractions import Fraction
from itertools import combinations

from carnot.algebra import validate
from carnot.catalog import abelian, counterexample_9d, engel, free_step2, heisenberg
from carnot.currents import (
    InvariantPrecurrent,
    ce_boundary,
    invariant_boundary,
    is_current,
    pushforward_scale,
    restrict_by_dtheta,
    vertical_basis,
)
from carnot.exterior import (
    MultiCovector,
    MultiVector,
    basis_covector,
    basis_multivector,
    basis_tuples,
    contract,
    mc_differential,
    pair,
    wedge,
)
from carnot.expressions import format_multivector, parse_multivector
from carnot.rectifiability import (
    decompose,
    find_simple_cycle,
    is_purely_unrectifiable,
    nonsimple_cycle_exists,
    plucker_decomposable,
)
from carnot.rumin import invariant_cycle_space, vertical_ideal, vertical_ideal_covers

ok = True


def check(name, cond):
    global ok
    status = "ok " if cond else "FAIL"
    print(f"[{status}] {name}")
    if not cond:
        ok = False


h1 = heisenberg(1)
h2 = heisenberg(2)
h3 = heisenberg(3)

# --- algebra ---
check("H1 total_dim 3", h1.total_dim == 3)
check("H1 Q=4", h1.homogeneous_dimension == 4)
check("H3 Q=8", h3.homogeneous_dimension == 8)
check("abelian Q=n", abelian(3).homogeneous_dimension == 3)
check("counterexample Q=14", counterexample_9d().homogeneous_dimension == 14)
check("engel Q=7", engel().homogeneous_dimension == 7)
check("free_step2(3) Q=9", free_step2(3).homogeneous_dimension == 9)

for alg in (h1, h2, h3, abelian(3), counterexample_9d(), engel(), free_step2(3)):
    check(f"validate {alg.name} clean", validate(alg).ok)

X, Y, Z = (h1.basis_vector(i) for i in range(3))
check("[X,Y]=Z", h1.bracket(X, Y) == Z)
check("[x,x]=0", h1.bracket(X + 2 * Y, X + 2 * Y).is_zero())
cx = counterexample_9d()
check("[u1,u4]=v3", cx.bracket(cx.basis_vector(0), cx.basis_vector(3)) == cx.basis_vector(6))
check("dilation(2,Z)=4Z", h1.dilation(2, Z) == 4 * Z)

# --- exterior ---
check("basis_tuples(2,3)", basis_tuples(2, 3) == [(1, 2), (1, 3), (2, 3)])
check("basis_tuples(0,n)", basis_tuples(0, 5) == [()])
check("basis_tuples(3,3)", basis_tuples(3, 3) == [(1, 2, 3)])

XY = wedge(basis_multivector(3, (0,)), basis_multivector(3, (1,)))
check("X^Y tuple", XY == basis_multivector(3, (0, 1)))
u = basis_multivector(3, (0,)) + 2 * basis_multivector(3, (1,))
check("u^u=0", wedge(u, u).is_zero())

m9 = counterexample_9d()
o = basis_multivector(9, (0, 1)) - basis_multivector(9, (2, 3))
sq = wedge(o, o)
check("wedge square -2 u1234", sq == -2 * basis_multivector(9, (0, 1, 2, 3)))

check("pair dual", pair(basis_covector(3, (0, 1)), basis_multivector(3, (0, 1))) == 1)
check("pair distinct", pair(basis_covector(3, (0, 1)), basis_multivector(3, (0, 2))) == 0)
# theta ^ X*  on (X,Z): theta = Z*
thetaX = wedge(basis_covector(3, (2,)), basis_covector(3, (0,)))
check("pair(Z*^X*, X^Z) = -1", pair(thetaX, basis_multivector(3, (0, 2))) == -1)

check("contract(X^Y, X*) = Y", contract(basis_multivector(3, (0, 1)), basis_covector(3, (0,))) == basis_multivector(3, (1,)))
check("contract scalar", contract(basis_multivector(3, (0, 1)), 3 * basis_covector(3, ())) == 3 * basis_multivector(3, (0, 1)))
check("contract(X^Y^Z, (X^Y)*) = Z", contract(basis_multivector(3, (0, 1, 2)), basis_covector(3, (0, 1))) == basis_multivector(3, (2,)))

thz = basis_covector(3, (2,))
dth = mc_differential(h1, thz)
check("dZ* = -X*^Y*", dth == -1 * basis_covector(3, (0, 1)))
check("dX* = 0", mc_differential(h1, basis_covector(3, (0,))).is_zero())
check("abelian dtheta 0", mc_differential(abelian(3), basis_covector(3, (0,))).is_zero())

# contact volume
for n, alg in ((1, h1), (2, h2)):
    th = basis_covector(alg.total_dim, (alg.total_dim - 1,))
    dt = mc_differential(alg, th)
    vol = th
    for _ in range(n):
        vol = wedge(vol, dt)
    check(f"contact volume H{n}", not vol.is_zero())

# --- currents ---
b = ce_boundary(h1, basis_multivector(3, (0, 1)))
check("boundary X^Y = -Z", b == -1 * basis_multivector(3, (2,)))
check("boundary deg1 = 0", ce_boundary(h1, basis_multivector(3, (0,))).is_zero())
check("cycle boundary 0", ce_boundary(m9.total_dim and m9 and m9, o).is_zero() if False else ce_boundary(m9, o).is_zero())

T2 = InvariantPrecurrent(h2, basis_multivector(5, (0, 1)) + basis_multivector(5, (2, 3)))
check("H2 boundary X1Y1+X2Y2 = -2Z", invariant_boundary(T2).vector == -2 * basis_multivector(5, (4,)))
check("H2 X1^X2 current", is_current(InvariantPrecurrent(h2, basis_multivector(5, (0, 2)))))
check("H1 X^Y not current", not is_current(InvariantPrecurrent(h1, basis_multivector(3, (0, 1)))))
check("cx cycle is current", is_current(InvariantPrecurrent(m9, o)))

check("vertical_basis H1 = [Z*]", vertical_basis(h1) == [basis_covector(3, (2,))])
check("vertical_basis abelian = []", vertical_basis(abelian(3)) == [])
check("vertical_basis cx len 5", len(vertical_basis(m9)) == 5)

T = InvariantPrecurrent(h1, basis_multivector(3, (0, 1)))
r = restrict_by_dtheta(T, thz)
check("restrict H1 = -1", r == MultiVector(3, 0, {(): Fraction(-1)}))
Tcx = InvariantPrecurrent(m9, o)
check("restrict cx v1* = 0", restrict_by_dtheta(Tcx, basis_covector(9, (4,))).is_zero())

check("pushforward H1 k2 r2 = 1/4", pushforward_scale(T, 2) == Fraction(1, 4))
check("pushforward r=1", pushforward_scale(T, 1) == 1)

# --- signed pairing identity: determine the true sign ---
# pair(theta ^ b, boundary(T)) vs pair(b, restrict(T, theta))
import random

rng = random.Random(7)
sign_plus = True
sign_minus = True
for alg in (h1, h2, h3, m9, engel(), free_step2(3)):
    nn, tot = alg.horizontal_dim, alg.total_dim
    for k in range(2, nn + 1):
        for _ in range(40):
            terms = {}
            for tup in rng.sample(list(combinations(range(nn), k)), min(3, len(list(combinations(range(nn), k))))):
                terms[tup] = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
            Tr = InvariantPrecurrent(alg, MultiVector(tot, k, terms))
            bd = invariant_boundary(Tr).vector
            for th in vertical_basis(alg):
                rest = restrict_by_dtheta(Tr, th)
                for btup in combinations(range(tot), k - 2):
                    bcov = basis_covector(tot, btup)
                    lhs = pair(wedge(th, bcov), bd)
                    rhs = pair(bcov, rest)
                    if lhs != rhs:
                        sign_plus = False
                    if lhs != -rhs:
                        sign_minus = False
print(f"identity with +: {sign_plus};  identity with -: {sign_minus}")
check("signed identity holds with +", sign_plus)

# --- rumin ---
check("H1 k2 cycles dim 0", invariant_cycle_space(h1, 2).dimension == 0)
cs = invariant_cycle_space(h2, 2)
check("H2 k2 cycles dim 5", cs.dimension == 5)
for tup in ((0, 2), (0, 3), (1, 2), (1, 3)):
    check(f"H2 contains {tup}", cs.contains(basis_multivector(5, tup)))
check("H2 contains X1Y1-X2Y2", cs.contains(basis_multivector(5, (0, 1)) - basis_multivector(5, (2, 3))))
check("cx k2 cycles dim 1", invariant_cycle_space(m9, 2).dimension == 1)
gen = invariant_cycle_space(m9, 2).element(0)
check("cx generator = u1^u2-u3^u4 (up to scale)", gen == o or gen == -1 * o)

for n, alg in ((1, h1), (2, h2), (3, h3)):
    for k in range(n + 1, 2 * n + 1):
        check(f"H{n} k={k} trivial", invariant_cycle_space(alg, k).dimension == 0)
    for k in range(1, n + 1):
        check(f"H{n} k={k} nontrivial", invariant_cycle_space(alg, k).dimension >= 1)

check("free_step2(3) k2 zero", invariant_cycle_space(free_step2(3), 2).dimension == 0)

vi = vertical_ideal(h1, 2)
check("H1 ideal k2 full", vertical_ideal_covers(h1, 2) == (True, 0))
check("H1 ideal k1 (false,2)", vertical_ideal_covers(h1, 1) == (False, 2))
check("H1 ideal k1 dim 1", vertical_ideal(h1, 1).dimension == 1)
for n, alg in ((1, h1), (2, h2)):
    for k in range(n + 1, 2 * n + 2):
        check(f"H{n} covers k={k}", vertical_ideal_covers(alg, k) == (True, 0))
    cov, cod = vertical_ideal_covers(alg, n)
    check(f"H{n} k={n} not covered", cov is False and cod > 0)
check("abelian ideal zero", vertical_ideal(abelian(3), 2).dimension == 0)

# --- rectifiability ---
check("plucker simple", plucker_decomposable(basis_multivector(9, (0, 1))))
check("plucker cx false", not plucker_decomposable(o))
fac = decompose(basis_multivector(5, (0, 2)) + basis_multivector(5, (0, 3)))
check("decompose factored form", fac is not None)

v = find_simple_cycle(h2, 2)
check("H2 simple-cycle YES (X1,X2)", v.status == "YES" and [sorted(w.coeffs) for w in v.witness] == [[0], [2]])
v = find_simple_cycle(h1, 2)
check("H1 k2 simple NO", v.status == "NO" and v.certificate["strategy"] == "kernel-rank")
v = find_simple_cycle(m9, 2)
check("cx k2 simple NO plucker", v.status == "NO" and v.certificate["strategy"] == "plucker")
for n, alg in ((1, h1), (2, h2), (3, h3)):
    v = find_simple_cycle(alg, n)
    check(f"H{n} k={n} YES X-basis", v.status == "YES" and [sorted(w.coeffs) for w in v.witness] == [[2 * i] for i in range(n)])

check("rect H1 k2 YES", is_purely_unrectifiable(h1, 2).status == "YES")
check("rect H2 k2 NO", is_purely_unrectifiable(h2, 2).status == "NO")
check("rect cx k2 YES", is_purely_unrectifiable(m9, 2).status == "YES")
check("rect k>dimH", is_purely_unrectifiable(h1, 5).status == "YES")

check("nonsimple cx YES", nonsimple_cycle_exists(m9, 2).status == "YES")
check("nonsimple H1 NO", nonsimple_cycle_exists(h1, 2).status == "NO")
check("nonsimple abelian4 NO", nonsimple_cycle_exists(abelian(4), 2).status == "NO")
check("engel simple k2 NO", find_simple_cycle(engel(), 2).status == "NO")

# --- expressions ---
p = parse_multivector("3/2*u1^u3 - u2^u4", m9)
check("parse 3/2*u1^u3-u2^u4", p == Fraction(3, 2) * basis_multivector(9, (0, 2)) - basis_multivector(9, (1, 3)))
check("format roundtrip", format_multivector(p, m9) == "3/2*u1^u3 - u2^u4")
check("parse reorder sign", parse_multivector("Y1^X1", h1) == -1 * basis_multivector(3, (0, 1)))
check("parse star covector", parse_multivector("Z*", h1, covector=True) == basis_covector(3, (2,)))
check("format boundary -Z", format_multivector(-1 * basis_multivector(3, (2,)), h1) == "-Z")

print()
print("ALL OK" if ok else "SOME CHECKS FAILED")
sys.exit(0 if ok else 1)
