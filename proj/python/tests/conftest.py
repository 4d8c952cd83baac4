import os

import pseudomod

expected = os.environ.get("PSEUDOMOD_EXPECT_DIR")
if expected and not os.path.realpath(pseudomod.__file__).startswith(os.path.realpath(expected)):
    raise RuntimeError(f"imported {pseudomod.__file__}, expected a module under {expected}")
