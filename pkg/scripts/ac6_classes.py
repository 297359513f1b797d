"""Print the metrics of the ten six-arc AC forms as a table."""

from dataclasses import dataclass

from twodd.fixtures import AC6_FILES, ac6
from twodd.quotients import classify_ac6


@dataclass
class Config:
    sep: str = "  "


def main(cfg: Config = Config()) -> None:
    cols = ("class", "V", "loops", "exit/entry", "open factors", "routes", "type")
    rows = []
    for name in AC6_FILES.values():
        c = classify_ac6(ac6(name))
        rows.append((c.name, c.vertices, c.loops, c.exit_entry, c.open_factors, c.open_routes,
                     "closed" if c.closed else "open"))
    widths = [max(len(str(r[i])) for r in rows + [cols]) for i in range(len(cols))]
    for r in [cols] + rows:
        print(cfg.sep.join(str(x).ljust(w) for x, w in zip(r, widths)))


if __name__ == "__main__":
    main()
