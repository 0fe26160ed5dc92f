"""Tour of the Lorentzian 4-space layer: products, causal characters,
model spaces, and the ternary cross product.

Run:  python3 demos/01_lorentz_algebra.py
"""

import numpy as np

from ruled4.lorentz import (
    CausalCharacter,
    ModelSpace,
    Vec4,
    characterize,
    cross4,
    lorentz_dot,
    lorentz_norm,
)


def show(label, vec):
    info = characterize(vec)
    members = ", ".join(sorted(m.name for m in info.memberships)) or "-"
    q = lorentz_dot(vec, vec)
    print(f"  {label:<28} <x,x> = {q:+.4f}  |x| = {info.norm:.4f}  "
          f"{info.character.name:<9} in: {members}")


print("Causal characters and model-space membership")
print("(slot 0 is the timelike direction; signature -+++)\n")
show("unit future timelike", Vec4(1.0, 0.0, 0.0, 0.0))
show("hyperbolic sheet point", Vec4(np.cosh(0.8), np.sinh(0.8), 0.0, 0.0))
show("unit spacelike", Vec4(0.0, 1.0, 0.0, 0.0))
show("de Sitter point", Vec4(np.sinh(0.5), np.cosh(0.5), 0.0, 0.0))
show("light cone point", Vec4(2.0, 2.0, 0.0, 0.0))
show("zero vector", Vec4.zero())

print("\nTernary cross product: one vector orthogonal to three")
x = Vec4(0.3, 1.2, -0.4, 0.9)
y = Vec4(-1.1, 0.2, 0.8, 0.1)
z = Vec4(0.5, -0.7, 1.3, -0.2)
c = cross4(x, y, z)
print(f"  c = cross4(x, y, z) = {tuple(round(v, 6) for v in c.components())}")
for name, vec in (("x", x), ("y", y), ("z", z)):
    print(f"  <c, {name}> = {lorentz_dot(c, vec):+.2e}")

print("\nLagrange identity: <c,c> equals -det of the Lorentz Gram matrix")
gram = np.array([[lorentz_dot(a, b) for b in (x, y, z)] for a in (x, y, z)])
print(f"  <c,c>            = {lorentz_dot(c, c):+.12f}")
print(f"  -det(Gram)       = {-np.linalg.det(gram):+.12f}")

print("\nContraction identity: <cross4(x,y,z), w> is a 4x4 determinant")
w = Vec4(0.9, 0.4, -1.0, 0.6)
mat = np.array([v.components() for v in (w, x, y, z)])
print(f"  <c, w>           = {lorentz_dot(c, w):+.12f}")
print(f"  det[w; x; y; z]  = {np.linalg.det(mat):+.12f}")

print("\nBasis products (antisymmetric, orientation fixed by slot order):")
e = [Vec4.basis(i) for i in range(4)]
for (i, j, k) in ((1, 2, 3), (0, 1, 2), (0, 1, 3), (0, 2, 3)):
    out = cross4(e[i], e[j], e[k])
    print(f"  cross4(e{i}, e{j}, e{k}) = {out.components()}")

print(f"\nlorentz_norm measures |<x,x>|^(1/2): "
      f"norm of (3,0,0,0) timelike = {lorentz_norm(Vec4(3,0,0,0)):.1f}")
assert characterize(Vec4(3, 0, 0, 0)).character is CausalCharacter.TIMELIKE
assert ModelSpace.HYPERBOLIC in characterize(Vec4(1, 0, 0, 0)).memberships
print("done.")
