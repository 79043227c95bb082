"""
Checking the total-index inequality on the toric Fano 3-folds
=============================================================

Load the bundled list of the 18 smooth toric Fano 3-folds, run the batch
verifier and look at where equality holds.
"""

# %%
from toricindex.harness import fixture_group, run_batch, write_report

records = fixture_group("fano3folds")
batch = run_batch(records)
print(batch.summary)

# %%
# Equality cases must be exactly the products of projective spaces.
for e in batch.entries:
    r = e.report
    flag = "=" if e.total_verdict.equality_case else " "
    print(f"{r.name:9s} rho={r.rho} i={r.fano_index} tau={r.tau} "
          f"defect={r.total_defect} {flag} factors={r.factors}")

# %%
# The classical Mukai bound d + rho - i*rho for comparison.
print(sorted({e.report.mukai_defect for e in batch.entries}))

# %%
print(write_report(batch)[:400])
