# Where do the corner points of a weak interference channel sit?
import numpy as np

from gicbounds import (ChannelParams, conjectured_corner_rates, etw_kramer_threshold,
                       etw_region, symmetric_corner_upper, weak_corner_bounds)

# a symmetric channel, 20 dB per user, half the power leaks across
params = ChannelParams.symmetric(100, 0.5)
region = etw_region(params)
for c in region:
    print(f"{c.c1:.0f}*R1 + {c.c2:.0f}*R2 <= {c.bound:.4f}   ({c.tag})")

# the corner where user 1 runs at capacity: R2 is known only up to an interval
iv = weak_corner_bounds(params).corner_at_c1
print("R2 at R1=C1 lies in [%.4f, %.4f], active term %s" % (iv.lo, iv.hi, iv.active_term))
print("conjectured corner rate:", conjectured_corner_rates(params).r2)

# the interval shrinks as the power grows
for p in (1e2, 1e3, 1e4, 1e6):
    iv = weak_corner_bounds(ChannelParams.symmetric(p, 0.5)).corner_at_c1
    print(f"P={p:>9.0f}  width={iv.width:.2e}")

# which outer bound is tighter depends on the SNR; the switch happens here
for a in (0.1, 0.2, 0.5, 0.9):
    thr = etw_kramer_threshold(a)
    print(f"a={a}: threshold P={thr:.3f} ({10 * np.log10(thr):.2f} dB)")

b = symmetric_corner_upper(100, 0.1)
print("at P=100, a=0.1:", b.active_term, round(b.value, 4), "vs ETW", round(b.details["etw"], 4))
