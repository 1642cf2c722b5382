"""
Running the verification registry
=================================

Each registered check compares two exact computations over every relevant
input of degree n and returns a machine-readable report. The same registry
backs ``jacklab verify``.
"""

import json

from jacklab.verify import REGISTRY, run_check

for cid, chk in REGISTRY.items():
    rep = run_check(cid, min(5, chk.max_n))
    print(rep.summary())

# one full JSON report
rep = run_check("thm5", 3)
print(json.dumps(rep.to_json(with_elapsed=False), indent=1)[:800])

# informational cases carry data but never fail a run
info = [c for c in run_check("conj11_exist", 4).cases if c.verdict == "info"]
print(f"\n{len(info)} informational cases, first:", info[0].inputs, info[0].data)
