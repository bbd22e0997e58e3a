#!/usr/bin/env python3
# coding: utf-8

# # Bell polynomials and Adomian polynomials

# In[1]:

from bellpoly import (
    METHODS,
    Exp,
    adomian_evaluate,
    adomian_rach,
    bell_complete_exp,
    bell_exp_rec_duan,
    bell_partial_exp,
)
from bellpoly.cli import render_value
from bellpoly.exactnum import to_text


# Partial exponential Bell polynomials, built straight from the partition vectors.

# In[2]:

for k in range(1, 5):
    print(f"B(4,{k}) =", to_text(bell_partial_exp(4, k)))
print("B_4 =", to_text(bell_complete_exp(4)))


# The recursive route returns a sum over vectors. Its polynomial is the scaled form,
# where u_j stands for j! u_j.

# In[3]:

print(to_text(bell_exp_rec_duan(6, 3).to_poly()))


# The Adomian polynomials for exp(u) come out with the exponential factored.

# In[4]:

f = Exp(1)
for n in range(1, 5):
    print(f"A_{n} =", render_value(adomian_evaluate(adomian_rach(n), f), 0, f))


# Every construction route gives the same abstract polynomial.

# In[5]:

for n in range(0, 8):
    ref = METHODS["oracle"](n)
    print(n, all(route(n) == ref for route in METHODS.values()))
