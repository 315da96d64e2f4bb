"""Shared record of acceptance results so the terminal summary can print them."""

LINES: list[str] = []


def record(number: int, title: str, ok: bool, seconds: float, limit: float, detail: str = "") -> str:
    within = seconds < limit
    status = "PASS" if ok and within else "FAIL"
    line = f"{status} criterion {number}: {title} ({seconds:.2f}s, limit {limit:g}s)"
    if not within:
        line += " [over time]"
    if detail:
        line += f" {detail}"
    LINES.append(line)
    print(line)
    return status
