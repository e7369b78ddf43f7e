# %% [markdown]
# # Classifying extended Clifford algebras
#
# `Cl(r,s|p,q)` has r+s commuting generators and p+q anticommuting ones.
# Its class is a triple (type, M, N), and two algebras are isomorphic exactly
# when their triples agree.

# %%
from extclifford import ExtSignature, classify, derive_params, is_isomorphic

algebras = [ExtSignature(3, 0, 7, 15), ExtSignature(4, 0, 3, 18), ExtSignature(5, 0, 11, 9)]
for sg in algebras:
    d = derive_params(sg)
    print(f"{sg}: m={d.m} n={d.n} M={d.M} N={d.N} t={d.t} -> {classify(sg)}")

# %% [markdown]
# The first algebra has M=3 and the other two have M=5, so only the last two
# can be isomorphic. They also share type IV.

# %%
for i in range(3):
    for j in range(i + 1, 3):
        print(algebras[i], algebras[j], is_isomorphic(algebras[i], algebras[j]))

# %% [markdown]
# ## Cartan periodicity
# For plain Clifford algebras the type depends only on (p - q) mod 8.

# %%
from extclifford import cartan_decompose

for p in range(9):
    print(f"Cl({p},0) ~ {cartan_decompose(p, 0)}   type {classify(ExtSignature(0, 0, p, 0)).type}")

# %% [markdown]
# ## Canonical representatives
# Each class has one fixed representative, and classifying it returns the same label.

# %%
from extclifford import canonical_signature

for sg in algebras:
    label = classify(sg)
    rep = canonical_signature(label)
    print(f"{sg} ~ {rep}  (round trip ok: {classify(rep) == label})")
