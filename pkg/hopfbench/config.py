"""Runtime settings.

Values come from the environment, optionally seeded from a ``.env`` file in
the working directory.
"""

import os

from dotenv import load_dotenv

# environment variables
load_dotenv()

LOG_LEVEL = os.getenv("HOPFBENCH_LOG_LEVEL", "WARNING").upper()
SEED = int(os.getenv("HOPFBENCH_SEED", "1729"))
SAMPLE_SIZE = int(os.getenv("HOPFBENCH_SAMPLE_SIZE", "50"))
SYMMETRIZER_BUDGET = int(os.getenv("HOPFBENCH_SYMMETRIZER_BUDGET", "10000"))
GROUPLIKE_BUDGET = int(os.getenv("HOPFBENCH_GROUPLIKE_BUDGET", str(2**20)))
ISO_BUDGET = int(os.getenv("HOPFBENCH_ISO_BUDGET", "65536"))
MAX_RULES = int(os.getenv("HOPFBENCH_MAX_RULES", "2000"))
SWEEP_LIMIT = int(os.getenv("HOPFBENCH_SWEEP_LIMIT", "4096"))
BASIS_CAP = int(os.getenv("HOPFBENCH_BASIS_CAP", "20000"))
# progress bars; the CLI switches this off with --quiet
PROGRESS = os.getenv("HOPFBENCH_PROGRESS", "1") not in ("0", "false", "no")
