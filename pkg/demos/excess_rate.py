# How much sum rate is lost by sitting at a corner point?
import numpy as np

from gicbounds import delta_bounds_improved, delta_lower_simple, delta_upper_simple

p = 500.0

# the closed-form bounds are cheap but loose
for a in (0.01, 0.05, 0.1, 0.3, 0.7):
    up, lo = delta_upper_simple(p, a), delta_lower_simple(p, a)
    print(f"a={a:<5} simple bounds [{lo.value:.3f}, {up.value:.3f}]")

# the optimized sum-rate bounds tighten both sides
for a in (0.045, 0.11):
    r = delta_bounds_improved(p, a)
    print(f"a={a:<5} improved [{r.lower_improved.value:.3f}, {r.upper_improved.value:.3f}]"
          f"  upper from {r.upper_improved.active_term}, lower from {r.lower_improved.active_term}")

# upper bound at 0.045 below the lower bound at 0.11: the loss is not monotone in a
a_sweep = np.round(np.linspace(0.03, 0.15, 7), 3)
for a in a_sweep:
    r = delta_bounds_improved(p, a)
    print(f"{a:.3f}  {r.lower_improved.value:.3f}  {r.upper_improved.value:.3f}")
