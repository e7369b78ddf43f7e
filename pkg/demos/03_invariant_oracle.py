# %% [markdown]
# # The brute-force oracle
#
# The profile (log2 dim, log2 center dim, trace-form signature) is computed by
# sweeping all blades. The package also predicts it from the class label, and
# the two routes must agree.

# %%
import time

from extclifford import brute_profile, classify, predicted_profile, profile_to_label
from extclifford.checks import signatures_up_to

t0 = time.perf_counter()
sigs = list(signatures_up_to(10))
disagree = [sg for sg in sigs if profile_to_label(brute_profile(sg)) != classify(sg)]
print(f"{len(sigs)} signatures, {len(disagree)} disagreements, {time.perf_counter() - t0:.2f}s")

# %% [markdown]
# Profiles of the four building blocks:

# %%
from extclifford import ExtSignature

for name, sg in [("R(2)=Cl(1,1)", (0, 0, 1, 1)), ("H=Cl(0,2)", (0, 0, 0, 2)), ("C=Cl(0,1)", (0, 0, 0, 1)), ("R+R=Cl(1,0)", (0, 0, 1, 0))]:
    sg = ExtSignature(*sg)
    print(f"{name:14s} brute {brute_profile(sg)}  predicted {predicted_profile(classify(sg))}")
