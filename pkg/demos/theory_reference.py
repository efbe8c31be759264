"""Quick reference card: every closed form the experiments compare against."""

from eideal.asymptotics import (expected_chordless_cycles,
                                expected_local_cycles, karp_sipser_root,
                                karp_sipser_upper, mcdiarmid_tail,
                                near_lipschitz_tail, prob_lp_dense_window,
                                prob_lr_dense_window, prob_lr_sparse_window)

print("sparse-window limit  exp(-sqrt(r)/2)(1 + sqrt(r)/2):")
for rate in (0.25, 1.0, 4.0, 16.0):
    print(f"  rate {rate:5.2f} -> {prob_lr_sparse_window(rate).value:.6f}")

print("\ndense-window limits  exp(-r/8) (presentation) and the k-series"
      " (resolution):")
for rate in (0.25, 0.5, 0.9, 8.0, 16.0):
    lp = prob_lp_dense_window(rate).value
    lr = prob_lr_dense_window(rate)
    note = f" (truncation <= {lr.truncation_error:.1e})" if rate < 1 else \
        " (series diverges, limit exactly 0)"
    print(f"  rate {rate:5.2f} -> presentation {lp:.6f}, "
          f"resolution {lr.value:.6f}{note}")

print("\nmatching fixed point t = exp(-r exp(-rt)) and the growth bound:")
for rate in (0.5, 1.0, 2.0):
    t = karp_sipser_root(rate)
    print(f"  rate {rate:4.1f} -> t* = {t:.9f}, "
          f"upper bound {karp_sipser_upper(rate).value:.6f}")

print("\nexpected chordless 4-cycles at a few design points:")
for m, q in ((30, 0.3), (60, 0.1)):
    print(f"  m={m:3d} q={q:.2f} -> {expected_chordless_cycles(m, q, 4):.3f}")
print(f"  with the isolation factor, n=60 p=0.9 k=4 -> "
      f"{expected_local_cycles(60, 0.9, 4):.5f}")

print("\ndeviation bounds (reported raw; above 1 means vacuous):")
print(f"  bounded differences  n=100 M=1 t=40 -> "
      f"{mcdiarmid_tail(100, 1, 40):.5f}")
print(f"  degree-Lipschitz     n=100 r=1 M=8 t=40 -> "
      f"{near_lipschitz_tail(100, 1.0, 8, 40):.5f}")
