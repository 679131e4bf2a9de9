"""Field-size scaling for fixed locality: how the code length n grows with
the prime q, and the ratio log q / log n.  Indicative only; the asymptotic
claim is not testable at desk scale."""

from mrcodes import scaling_table

rows = scaling_table(2, [101, 211, 401, 809, 1601, 3203])
print(f"{'q':>6} {'r':>3} {'n':>5} {'log q/log n':>12} {'length bound':>13}")
for row in rows:
    print(f"{row['q']:>6} {row['r']:>3} {row['n']:>5} "
          f"{row['log_q_over_log_n']:>12.3f} {row['log_n_lower_bound']:>13.3f}")
print("\n(n is monotone in q; the ratio trends down as q grows with r fixed,"
      "\n with local bumps where the set construction changes regime)")
