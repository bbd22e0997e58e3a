#!/usr/bin/env python3
# coding: utf-8

# # Symbolic identity checks
#
# Each check compares two exact polynomials in alpha and beta.

# In[1]:

from bellpoly import IDENTITIES, run_identity
from bellpoly.exactnum import to_text
from bellpoly.identities import exp_identity_lhs, stirling_row_from_bell


# In[2]:

print("n=3 left side:", to_text(exp_identity_lhs(3)))


# In[3]:

for name in IDENTITIES:
    if name == "binomial":
        ok = all(r.holds for m in range(2, 11) for n in range(1, m) for r in run_identity(name, n, m))
    else:
        ok = all(r.holds for n in range(1, 9) for r in run_identity(name, n))
    print(f"{name:14s} {'holds' if ok else 'FAILS'}")


# Evaluating B(n,k) at u_j = (j-1)! gives the unsigned Stirling numbers of the first kind.

# In[4]:

for n in range(1, 8):
    print(n, [int(v) for v in stirling_row_from_bell(n)])
