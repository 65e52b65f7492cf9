# Locating the smallest and largest excess rate along a for three powers
from gicbounds.report import rows_to_csv, table1

rows = table1([27, 40, 60])
print(rows_to_csv(rows))

# the minimum sits near 1/sqrt(P) and the maximum near P**(-1/3)
for r in rows:
    print(f"{r['p_db']:.0f} dB: a_min {r['a_min']:.4f} (~{r['a_min_asymptotic']:.4f}),"
          f" a_max {r['a_max']:.4f} (~{r['a_max_asymptotic']:.4f})")
