from .Marking import mark_strong, StrongMarking, VertexMark
from .Compile import compile, compile_checked, Compiler
from .Blowup import blowup_family, blowup_report, blowup_row, probabilistic_complexity, BlowupReport
from .Soundness import soundness_harness, SoundnessReport
