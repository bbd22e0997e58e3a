#!/usr/bin/env python3
# coding: utf-8

# # Decomposition series for two test equations
#
# u' = alpha exp(-beta u), u(0) = 1, and u' = alpha u^(1 - 1/alpha), u(0) = 1.
# Each component u_{n+1} is the integral of alpha A_n.

# In[1]:

from bellpoly import (
    ALPHA,
    BETA,
    Exp,
    Power,
    adm_solve,
    closed_form_exp_series,
    closed_form_power_series,
    compare_series,
)
from bellpoly.exactnum import to_text


# In[2]:

sol = adm_solve(Exp(-BETA), ALPHA, 1, 5)
for n, c in enumerate(sol.components):
    print(f"u{n} =", to_text(c))
print("matches closed form:", bool(compare_series(sol, closed_form_exp_series(5))))


# In[3]:

sol = adm_solve(Power(1, -1), ALPHA, 1, 5)
for n, c in enumerate(sol.components):
    print(f"u{n} =", to_text(c))
print("matches closed form:", bool(compare_series(sol, closed_form_power_series(5))))
