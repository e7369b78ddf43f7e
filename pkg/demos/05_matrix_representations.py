# %% [markdown]
# # Integer matrix representations
#
# Canonical representations are Kronecker products of four base blocks.
# Regular representations act by left multiplication on the blade basis.
# Both are checked exactly against the generator relations.

# %%
from extclifford import ClassLabel, ExtSignature, GeneratorSystem, canonical_rep, regular_rep, verify_relations

reps = canonical_rep(ClassLabel("V", 1, 1))
print("type V, M=1, N=1:", len(reps.matrices), "generators of size", reps.dim, "relations:", verify_relations(reps))
for g in reps.dense():
    print(g, "\n")

# %%
sys = GeneratorSystem.from_signature(ExtSignature(1, 1, 2, 2))
reg = regular_rep(sys)
print("regular rep of Cl(1,1|2,2):", reg.dim, "x", reg.dim, "relations:", verify_relations(reg))
