#!/usr/bin/env python3
"""Print the CSO run on the five-A, four-B worked example, one DAG row per sub-step."""

from stickgraph.cso import run_cso
from stickgraph.model import fixture, serialize_instance

inst = fixture("G1")
print(serialize_instance(inst))
res = run_cso(inst, trace=True)
for row in res.dag.trace:
    print(f"{row.step:<9} {row.what:<12} {row.text}")
print("order:", res.order)
