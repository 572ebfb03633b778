"""Select the labelling kernel: compiled extension if built, else pure Python."""

try:
    from . import _canon_c as _impl

    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on build environment
    from . import _canon as _impl

    BACKEND = "python"

label_stream = _impl.label_stream
label_numbering = _impl.label_numbering
