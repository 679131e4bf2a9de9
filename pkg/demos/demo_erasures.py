"""Encode a message, knock out symbols, and watch local repair and global
decoding at work; then compare the Monte-Carlo failure rate against the
exact incorrectable-pattern probability."""

from mrcodes import (construct, decode, encode, exact_failure_probability,
                     is_correctable, local_repair, simulate)

code, _ = construct(2, 101)
print(f"using the (n={code.n}, k={code.k}, r={code.r}) code over GF(101)")

message = [17, 42, 99]
codeword = [s.value for s in encode(code, message)]
print(f"message  {message}")
print(f"codeword {codeword}")

# one erasure: repaired from the r=2 other symbols of its group
received = codeword[:]
received[1] = None
print(f"\nsingle erasure at column 1 (group 0): "
      f"local repair -> {local_repair(code, received, 1).value} "
      f"(truth {codeword[1]})")

# one erasure per group: still decodable
received = codeword[:]
received[0] = received[4] = None
print(f"erasures at columns 0 and 4: decode -> "
      f"{[s.value for s in decode(code, received)]}")

# a whole repair group gone: unrecoverable by design
print(f"erase all of group 0: correctable? "
      f"{is_correctable(code, (0, 1, 2))}")

p = 0.1
exact = exact_failure_probability(code, p)
report = simulate(code, p=p, trials=20_000, seed=7)
print(f"\nerasure simulation at p={p}: counts={report.counts}")
print(f"observed failure rate {report.failure_rate:.5f} "
      f"vs exact {exact:.5f}")
print(f"symbols read per local repair: {report.avg_symbols_read_per_repair}")
