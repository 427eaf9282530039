"""
Normal ordering a word
======================

Push every D to the right with Dx = xD + 1 and read off the coefficients.
"""

from weylorder import normal_order, normal_order_q, parse_word

# a Dyck word: as many x's as D's, and no prefix has more D's
w = "xxDxxDxDDD"
nf = normal_order(w)
print("offset", nf.offset)
for k, c in nf.items():
    print(f"  {c} x^{nf.offset + k} D^{k}")

# the exponent shorthand expands before anything else happens
w2 = parse_word("(xD)^5")
print(w2, normal_order(w2).sequence(6))     # Stirling numbers of the second kind

# words that are not Dyck still have a normal form, just with an offset
print(normal_order("DDxxx"))

# in the deformed algebra, Dx = q xD + 1 and coefficients become polynomials
nfq = normal_order_q(w)
for k, p in nfq.items():
    print(k, p.format("q"))

# setting q = 1 gives back the classical coefficients
assert nfq.at_one() == nf
