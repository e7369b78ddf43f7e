# %% [markdown]
# # Exact blade arithmetic
#
# Blades are bit masks over generator indices. Every product of two blades is
# another blade times a sign.

# %%
from extclifford import ExtSignature, GeneratorSystem, Multivector, blade, blade_product, center_basis

quat = GeneratorSystem.from_signature(ExtSignature(0, 0, 0, 2))
i, j = blade(0), blade(1)
print("i*j =", blade_product(quat, i, j))
print("j*i =", blade_product(quat, j, i))
print("(ij)^2 =", blade_product(quat, i | j, i | j))

# %% [markdown]
# Multivectors keep exact integer or rational coefficients.

# %%
from fractions import Fraction

d = GeneratorSystem.from_signature(ExtSignature(0, 0, 1, 0))
one, e = Multivector.scalar(d), Multivector.gen(d, 0)
idem = (one + e) * Fraction(1, 2)
print("idempotent:", idem, "squared:", idem * idem)
print("(1+e)(1-e) =", (one + e) * (one - e))

# %% [markdown]
# ## Centers
# A blade is central when it commutes with every generator. For `Cl(r,s|p,q)`
# the central blades number 2^M.

# %%
for sg in [ExtSignature(0, 0, 1, 1), ExtSignature(1, 0, 1, 1), ExtSignature(2, 1, 3, 0)]:
    sys = GeneratorSystem.from_signature(sg)
    print(sg, "central blades:", [bin(b) for b in center_basis(sys)])
