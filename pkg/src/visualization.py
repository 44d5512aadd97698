"""
Static renderings of an allocation: plain text and SVG.
"""
import io
from typing import List

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib import cm
from matplotlib.colors import rgb2hex

from .allocation import Allocation
from .errors import InstanceError
from .instance import Instance
from .measure import value

FORMATS = ("text", "svg")
SVG_SALT = "famcake"


class Visualizer:
    """Render allocations of an instance."""

    def __init__(self, width: float = 10.0, height: float = 2.2):
        """Initialize the visualizer.

        Args:
            width: SVG figure width in inches
            height: SVG figure height in inches
        """
        self.width = width
        self.height = height

    def _check(self, inst: Instance, allocation: Allocation) -> None:
        if len(allocation) != inst.k:
            raise InstanceError(f"allocation has {len(allocation)} pieces but the instance has {inst.k} families")

    def render(self, inst: Instance, allocation: Allocation, fmt: str = "text") -> str:
        if fmt == "text":
            return self.render_text(inst, allocation)
        if fmt == "svg":
            return self.render_svg(inst, allocation)
        raise ValueError(f"Unsupported render format: {fmt}")

    def render_text(self, inst: Instance, allocation: Allocation) -> str:
        """One line per family: its intervals, then every member's value of them."""
        self._check(inst, allocation)
        lines = []
        for family, piece in zip(inst.families, allocation.pieces):
            values = ", ".join(f"{member.name} {value(member.measure, piece)}" for member in family.members)
            lines.append(f"{family.name}: {piece.describe()} | {values}")
        return "\n".join(lines) + "\n"

    def family_colors(self, k: int) -> List[str]:
        return [rgb2hex(cm.tab10(j % 10)) for j in range(k)]

    def render_svg(self, inst: Instance, allocation: Allocation) -> str:
        """Horizontal bar of the cake with one color per family and labelled cuts.

        The output is byte-stable for fixed inputs.
        """
        self._check(inst, allocation)
        colors = self.family_colors(inst.k)
        with plt.rc_context({"svg.hashsalt": SVG_SALT, "svg.fonttype": "none"}):
            fig, ax = plt.subplots(figsize=(self.width, self.height))
            cuts = set()
            for j, (family, piece) in enumerate(zip(inst.families, allocation.pieces)):
                spans = [(float(left), float(right - left)) for left, right in piece.intervals]
                if spans:
                    ax.broken_barh(spans, (0, 1), facecolors=colors[j], edgecolor="black",
                                   linewidth=0.5, label=family.name)
                for left, right in piece.intervals:
                    cuts.update((left, right))
            for cut in sorted(cuts - {0, 1}):
                ax.axvline(float(cut), color="black", linewidth=0.8)
                ax.text(float(cut), 1.05, str(cut), ha="center", va="bottom", fontsize=8)
            ax.set_xlim(0, 1)
            ax.set_ylim(0, 1.4)
            ax.set_yticks([])
            ax.set_xticks([0, 1])
            ax.set_xticklabels(["0", "1"])
            ax.legend(loc="upper center", bbox_to_anchor=(0.5, -0.25), ncol=max(1, inst.k), frameon=False)
            ax.set_title(f"Division among {inst.k} families ({allocation.comp()} components)")
            buffer = io.StringIO()
            fig.savefig(buffer, format="svg", bbox_inches="tight", metadata={"Date": None})
            plt.close(fig)
        return buffer.getvalue()
