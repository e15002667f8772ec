from fractions import Fraction


def printed_ratio(text: str) -> Fraction:
    """Evaluate a ratio written like ``3^7/2^11`` or ``4/3``."""

    def term(t: str) -> int:
        base, _, exp = t.partition("^")
        return int(base) ** int(exp or 1)

    num, _, den = text.partition("/")
    return Fraction(term(num), term(den) if den else 1)


def last_digit_distance(ours: str, printed: str) -> int:
    """Distance in units of the printed last digit."""
    places = len(printed.partition(".")[2])
    scale = 10**places
    return abs(round(Fraction(ours) * scale) - round(Fraction(printed) * scale))
