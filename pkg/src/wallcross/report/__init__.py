from .figure import FigureSpec, reference_figure_spec, render_figure
from .serialize import emit_json
from .verify import FixtureResult, run_verify

__all__ = ["FigureSpec", "FixtureResult", "emit_json", "reference_figure_spec", "render_figure", "run_verify"]
