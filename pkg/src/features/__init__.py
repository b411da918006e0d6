from . import algebra, experiments, kripke, lukdecide, pcp, syntax

__all__ = ["algebra", "experiments", "kripke", "lukdecide", "pcp", "syntax"]
