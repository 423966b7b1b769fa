"""Fixture series transcribed from the printed outputs of the reference session."""

import math

from ordseries import DateIndex, Frame, Series, TimestampIndex, YearMonth, make_regular


def _days(*stamps):
    return [DateIndex.parse(t) for t in stamps]


def _stamps(*stamps):
    return [TimestampIndex.parse(t + "T00:00:00") for t in stamps]


Z1_DATES = ("2004-01-05", "2004-01-14", "2004-01-19", "2004-01-25", "2004-01-27",
            "2004-02-07", "2004-02-12", "2004-02-16", "2004-02-20", "2004-02-24")
Z1_VALUES = (0.74675994, 0.02107873, -0.29823529, 0.68625772, 1.94078850,
             1.27384445, 0.22170438, -2.07607585, -1.78439244, -0.19533304)

Z2_DATES = ("2004-01-03", "2004-01-05", "2004-01-17", "2004-01-19", "2004-01-24",
            "2004-02-08", "2004-02-12", "2004-02-13", "2004-02-25", "2004-02-26")
Z2_VALUES = (0.94306673, -0.04149429, 0.59448077, -0.52575918, -0.96739776,
             0.95605566, -0.62733473, -0.92845336, 0.56060280, 0.08291711)

Z_DATES = ("2004-02-02", "2004-02-08", "2004-02-09", "2004-02-21", "2004-02-22",
           "2004-02-29", "2004-03-05", "2004-03-10", "2004-03-14", "2004-03-20")
Z_COLUMNS = {
    "Aa": (1.25543390, -1.49458326, -1.87462247, -0.14538608, 0.22542418,
           1.20695518, -1.20861025, -0.11039563, 0.84202385, -0.19019104),
    "Bb": (0.68157316, 1.32341223, -0.87329289, 0.45234903, 0.53838938,
           0.31814222, 1.42379785, 1.34774254, -2.73842019, 0.12308872),
    "Cc": (-0.63292049, -1.49442269, 0.62733971, -0.14597401, 0.23136133,
           -0.01129202, -0.81614483, 0.95522468, 0.23150695, -1.51862157),
}

Z1INT_VALUES = (9.0, 8.0, 7.0, 6.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0)
Z1NA_VALUES = (9.0, None, 7.0, 6.0, 5.0, 6.0, None, 8.0, 9.0, None)

ZR3_VALUES = (-0.30969096, 0.08699142, -0.64837101, -0.62786277, -0.61932674,
              -0.95506154, -1.91736406, 0.38108885, 1.51405511)


def z1() -> Series:
    return Series(_stamps(*Z1_DATES), Z1_VALUES, name="z1")


def z2() -> Series:
    return Series(_stamps(*Z2_DATES), Z2_VALUES, name="z2")


def z2r() -> Series:
    """z2's values placed on z1's dates."""
    return Series(_stamps(*Z1_DATES), Z2_VALUES, name="z2")


def z() -> Frame:
    return Frame(_days(*Z_DATES), Z_COLUMNS)


def z1int() -> Series:
    return Series(_stamps(*Z1_DATES), Z1INT_VALUES, name="z1")


def z1na() -> Series:
    return Series(_stamps(*Z1_DATES), Z1NA_VALUES, name="z1")


def zr() -> Series:
    """sin(1..9) on the quarterly grid starting at 2000."""
    return make_regular([math.sin(k) for k in range(1, 10)], 2000.0, 4)


def zr3() -> Series:
    return make_regular(ZR3_VALUES, YearMonth.from_ym(2000, 1), 12)
