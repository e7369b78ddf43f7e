# %% [markdown]
# # Tensor products
#
# Tensor products of extended Clifford algebras are again extended Clifford
# algebras. Classification multiplies invariant profiles. The brute-force route
# puts every factor's generators into one system.

# %%
from extclifford import flatten, normalize_clifford_tensor, parse, system_profile, tensor_brute_system, tensor_classify, tensor_profile

for text in ["H * H", "C * C", "D * C", "Cl(1,0)^3 * Cl(0,2)", "(C * H)^2", "Cl(3,0) * Cl(0,3)"]:
    factors = flatten(parse(text))
    brute = system_profile(tensor_brute_system(factors))
    print(f"{text:22s} {tensor_classify(factors)}  predicted {tensor_profile(factors)}  brute {brute}")

# %% [markdown]
# With at most one odd-dimensional factor, a product of Clifford algebras is a
# single Clifford algebra. With more, a commutative part appears.

# %%
for factors in [[(1, 1)], [(1, 0), (0, 2)], [(0, 1), (0, 1)], [(1, 0), (0, 1), (2, 1)]]:
    print(factors, "->", normalize_clifford_tensor(factors))
