#!/usr/bin/env python3
# coding: utf-8

# # Partition vectors
#
# A vector (k1, ..., k_{n-k+1}) of multiplicities describes a partition of n
# into exactly k parts: part j appears k_j times.

# In[1]:

from bellpoly import enum_lambda, enum_theta, lambda_via_recurrence, partition_count


# Print the table for small n, one row per n and one column per k.

# In[2]:

for n in range(1, 7):
    cells = []
    for k in range(1, n + 1):
        cells.append(" ".join("(" + ",".join(map(str, v.parts)) + ")" for v in enum_lambda(n, k)))
    print(f"n={n}: " + " | ".join(cells))


# The padded form has length n. Zeros fill the tail.

# In[3]:

for v in enum_theta(5, 2):
    print(v.parts)


# The recurrence builds the same set from smaller n.

# In[4]:

same = all(
    lambda_via_recurrence(n, k) == enum_lambda(n, k)
    for n in range(2, 16) for k in range(2, n + 1)
)
print("recurrence agrees with enumeration up to n=15:", same)
print("p(20, 5) =", partition_count(20, 5))
