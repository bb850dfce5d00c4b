"""Print S(n)/n along the Thue-Morse schedule and the checkpoint values S(2k|A_n|)."""

from fractions import Fraction

from nadslab.schedules import shift_amount
from nadslab.words import block_length

for e in range(1, 21, 3):
    n = 1 << e
    print(f"n=2^{e:<2d} S(n)={shift_amount(n):>9d} S(n)/n={Fraction(shift_amount(n), n)}")
print()
for n in range(1, 8):
    a = block_length(n)
    print(f"|A_{n}|={a:3d} " + " ".join(str(shift_amount(2 * k * a)) for k in range(1, 6)))
