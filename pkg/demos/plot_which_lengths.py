"""
Which lengths occur?
====================

The morphism construction reaches every length from 7400 on, and most
shorter ones.  The lengths it misses are either settled by an explicit
word from the catalog or shown impossible by exhaustive search.
"""

import numpy as np

from fsword import catalog
from fsword.constructor import FORBIDDEN, KNOCKOUT, construct, knockout
from fsword.search import decide

left = knockout(7400)
print(len(left), "lengths below 7400 missed by the formulas:")
print(left)

# one more than the expected list KNOCKOUT: 424, which search settles
print(sorted(set(left) - set(KNOCKOUT)))
print(construct(424).stamp)

# every missed length is forbidden or has an explicit word
fixtures = catalog.fixtures()
unsettled = [m for m in left if m not in FORBIDDEN and m not in fixtures]
print("settled by neither:", unsettled)

# existence pattern for m <= 80, as a 0/1 array
exists = np.array([decide(m).exists for m in range(81)], dtype=int)
print(exists.reshape(9, 9))
print("missing lengths:", np.flatnonzero(exists == 0).tolist())

out = decide(73)
print(out.line(), out.nodes_explored, "nodes")
