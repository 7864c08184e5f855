"""Portable seeded generator: xorshift64* seeded through splitmix64.

Chosen so any implementation can reproduce generated point sets bit for bit:

    state = splitmix64(seed mod 2^64), replaced by 0x9E3779B97F4A7C15 if zero
    next():  x ^= x >> 12;  x ^= x << 25 (mod 2^64);  x ^= x >> 27
             return x * 0x2545F4914F6CDD1D mod 2^64
    randint(lo, hi): draw r until r < 2^64 - (2^64 mod span); lo + r mod span
"""

MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def splitmix64(x):
    x = (x + GOLDEN) & MASK
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK
    return x ^ (x >> 31)


class XorShift64Star:
    def __init__(self, seed):
        self.state = splitmix64(seed & MASK) or GOLDEN

    def next_u64(self):
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK

    def randint(self, lo, hi):
        """Uniform integer in [lo, hi], without modulo bias."""
        span = hi - lo + 1
        if span <= 0:
            raise ValueError("empty range")
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            r = self.next_u64()
            if r < limit:
                return lo + r % span
