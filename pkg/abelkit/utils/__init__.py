from .formatting import PiMultiple, format_truncated, matched_digits, parse_number, to_mpf
from .roots import newton_bisect
