"""Parity-patterned matrices, Schur-complement inversion, Berezinians.

A matrix over a super ring carries a grading on rows and columns: entries
where row and column parity agree must be even, the others odd.  Under this
pattern matrix multiplication is the ordinary one, inverses come from the
Schur complement, and the Berezinian det(A - B D^-1 C) / det(D) plays the
role of the determinant: it is multiplicative and a unit exactly on the
invertible matrices.
"""

from sgq import SuperMatrix, SuperRing, SuperShape, berezinian, sm_inv
from sgq.sampling import random_invertible, trial_rng

ring = SuperRing([], ["t1", "t2", "t3", "t4"])
one, zero = ring.one(), ring.zero()
t1, t2 = ring.gen("t1"), ring.gen("t2")

shape = SuperShape((1, 1), (1, 1))
g = SuperMatrix(ring, shape, [[one, t1], [t2, one]])
print("g       =", g)

g_inv = sm_inv(g)
print("g^-1    =", g_inv)
print("g g^-1  =", g * g_inv)

print("Ber(g)  =", berezinian(g))
print("Ber(I)  =", berezinian(SuperMatrix.identity(ring, 1, 1)))

# multiplicativity on a (2|2) pair with random nilpotent perturbations
rng = trial_rng(0, "demo.ber", 0)
x = random_invertible(ring, rng, 2, 2)
y = random_invertible(ring, rng, 2, 2)
lhs = berezinian(x * y)
rhs = berezinian(x) * berezinian(y)
print("Ber(XY) =", lhs)
print("Ber(X)Ber(Y) =", rhs)
print("multiplicative:", lhs == rhs)

# placing an odd element on the even-even diagonal violates the pattern
try:
    SuperMatrix(ring, shape, [[t1, zero], [zero, one]])
except Exception as err:
    print("rejected:", err)
