"""Tour of exact arithmetic in a free supercommutative ring.

Everything below is computed over Q(i)[x] (x) Lambda[th1, th2]: one even
generator, two odd ones.  All coefficients are exact Gaussian rationals;
there is no floating point anywhere.
"""

from fractions import Fraction

from sgq import SuperHom, SuperRing

ring = SuperRing(["x"], ["th1", "th2"])
x, th1, th2 = ring.gen("x"), ring.gen("th1"), ring.gen("th2")

# odd generators anticommute and square to zero
print("th1*th2       =", th1 * th2)
print("th2*th1       =", th2 * th1)
print("th1*th1       =", th1 * th1)

# the classic cancellation: cross terms kill each other
print("(x+th1)(x-th1) =", (x + th1) * (x - th1))

# body = set all odd generators to zero; soul = the nilpotent rest
a = ring.scalar(3) + 2 * th1 + x * th1 * th2
print("a             =", a)
print("body(a)       =", a.body())
print("soul(a)       =", a.soul())

# an element is a unit exactly when its body is a nonzero constant,
# and the inverse is computed by a terminating geometric series
u = ring.scalar(Fraction(1, 2)) + th1 * th2
print("u^-1          =", u.inv())
print("u * u^-1      =", u * u.inv())

# left derivatives by odd variables pick up the reordering sign
m = th1 * th2
print("d(th1*th2)/dth1 =", m.derivative("th1"))
print("d(th1*th2)/dth2 =", m.derivative("th2"))
print("d(x^2 + x*th1)/dx =", (x**2 + x * th1).derivative("x"))

# a parity-preserving substitution is exactly a point of the ring with
# values in a test algebra: here x maps to an even element of Lambda[t1..t4]
target = SuperRing([], ["t1", "t2", "t3", "t4"])
point = SuperHom(ring, target, {
    "x": target.one() + target.gen("t1") * target.gen("t2"),
    "th1": target.gen("t3"),
    "th2": target.gen("t4"),
})
print("x*th1 + 1  ->", point(x * th1 + ring.one()))
