# Binary Golay pairs for lengths 2^a 10^b 26^c and their certificates.
from golaycorr import construct_for_length, format_sequence, is_golay_pair, psc
from golaycorr.golay import admissible_exponents, admissible_lengths, double, seed_pair, turyn_product

# seeds: doubling grows powers of two, Turyn's product folds in 10 and 26
f, g = double(seed_pair(2))
print("doubled length-2 seed:", format_sequence(f), format_sequence(g))

f, g = turyn_product(seed_pair(2), seed_pair(26))
print("2 x 26 product, length", len(f), is_golay_pair(f, g))

# every admissible length up to 1000
for n in admissible_lengths(1000):
    f, g = construct_for_length(n)
    cert = is_golay_pair(f, g)
    print(f"{n:5d} {admissible_exponents(n)}  residual={cert.max_residual:.0f}  PSC={psc(f, g)}")
