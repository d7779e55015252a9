"""Constants module - centralized tags, file layouts and default experiment values."""


class Methods:
    """Selection method tags."""
    PROPOSED = "proposed"
    RANDOM = "random"
    US = "us"
    DRBO = "drbo"
    DRPTR = "drptr"
    CCBO = "ccbo"

    ALL = (PROPOSED, RANDOM, US, DRBO, DRPTR, CCBO)


class Settings:
    """Experiment setting tags."""
    SIMULATOR = "simulator"
    FIXED = "fixed"
    DATA_DRIVEN = "data-driven"

    ALL = (SIMULATOR, FIXED, DATA_DRIVEN)
    UNCONTROLLABLE = (FIXED, DATA_DRIVEN)


class Problems:
    """Benchmark problem tags."""
    SYNTHETIC = "synthetic"
    SIR_CASE1 = "sir-case1"
    SIR_CASE2 = "sir-case2"
    SIR_CASE3 = "sir-case3"
    SIR_CASE4 = "sir-case4"
    GP_PRIOR = "gp-prior"

    SIR_CASES = (SIR_CASE1, SIR_CASE2, SIR_CASE3, SIR_CASE4)
    ALL = (SYNTHETIC,) + SIR_CASES + (GP_PRIOR,)


class Labels:
    """Classification labels of a design point."""
    HIGH = "H"
    LOW = "L"
    MAYBE = "M"


class StopStatuses:
    """Stop status names as written to trace files."""
    CONTINUE = "continue"
    NO_SOLUTION = "no_solution"
    CONVERGED = "converged"


class EtaModes:
    ZERO = "zero"
    THEORETICAL = "theoretical"


class BetaModes:
    THEORETICAL = "theoretical"
    FIXED = "fixed"


class EpsilonModes:
    FIXED = "fixed"
    SCHEDULE = "schedule"


class Numerics:
    """Numerical tolerances shared by the library."""
    # Added once to the Gram diagonal (times the signal variance) when Cholesky fails.
    CHOLESKY_JITTER = 1e-10
    DISTRIBUTION_SUM_TOL = 1e-12


class SyntheticDefaults:
    """Synthetic benchmark parameters (one parameter row for all three settings)."""
    GRID_LO = -10.0
    GRID_HI = 10.0
    GRID_N = 50
    SIGNAL_VARIANCE_F = 1.0
    LENGTH_SCALE_F = 3.0
    NOISE_VARIANCE_F = 1e-8
    SQRT_BETA_F = 3.0
    SIGNAL_VARIANCE_G = 2500.0
    LENGTH_SCALE_G = 4.0
    NOISE_VARIANCE_G = 1e-4
    SQRT_BETA_G = 2.0
    THRESHOLD_H = 5.0
    ALPHA = 0.53
    EPSILON = 0.15
    XI = 1e-12
    ITERATIONS = 300
    MIXTURE_MEANS = (-5.0, 5.0)
    MIXTURE_VARIANCE = 10.0


class SirDefaults:
    """SIR simulation constants."""
    GRID_LO = 0.01
    GRID_HI = 0.5
    GRID_N = 50
    T_MAX = 15.0
    DT = 0.005
    S0 = 990.0
    I0 = 10.0
    R0 = 0.0
    ECONOMIC_BETA_WEIGHT = 450.0
    ECONOMIC_GAMMA_WEIGHT = 800.0
    ITERATIONS = 100


class BaselineDefaults:
    DRPTR_GAMMA = 0.1
    CCBO_MC_SAMPLES = 1000


class OutputFiles:
    """Output file names and CSV headers."""
    SUMMARY = "summary.csv"
    TRACE_TEMPLATE = "trace_{rep}.csv"
    PLOT = "utility_gap.svg"
    SUMMARY_HEADER = ("method", "setting", "problem", "iteration", "mean_utility_gap", "n_reps")
    TRACE_HEADER = ("t", "x_index", "w_index", "y_f", "y_g", "n_H", "n_L", "n_M",
                    "c_best", "recommend_index", "utility_gap", "status")
    SUMMARY_COMMENT = ("# replications that stopped early hold their final utility gap "
                       "for the remaining iterations")


class EnvVars:
    LOG_LEVEL = "DRCCBO_LOG_LEVEL"
    MAX_WORKERS = "DRCCBO_MAX_WORKERS"
    SIR_CACHE = "DRCCBO_SIR_CACHE"


class ExitCodes:
    OK = 0
    CONFIG_ERROR = 1
    RUNTIME_ERROR = 2


class LogLevels:
    """Logging level constants."""
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"

    ALL = (DEBUG, INFO, WARNING, ERROR, CRITICAL)
