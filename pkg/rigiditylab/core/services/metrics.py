"""
Prometheus metrics for rigiditylab.
Counts verdicts, sampling trials, suspected non-generic samples, oracle
solver starts and CLI invocations. Nothing here starts an exporter.
"""
from prometheus_client import Counter, Histogram

# ============================================================================
# Verdict Metrics
# ============================================================================

# Verdicts issued by the stress-rank procedure and its transfers
verdicts_total = Counter(
    'rigiditylab_verdicts_total',
    'Total number of global rigidity verdicts issued',
    ['verdict', 'field', 'space']  # 'GGR', 'GGF', ...; 'real'/'complex'; space kind
)

# Time spent deciding one graph
verdict_duration_seconds = Histogram(
    'rigiditylab_verdict_duration_seconds',
    'Time spent computing a single verdict',
    buckets=[0.001, 0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 10.0, 60.0]
)

# ============================================================================
# Sampling Metrics
# ============================================================================

# Random trials run by retried procedures
trials_total = Counter(
    'rigiditylab_trials_total',
    'Total number of randomized trials',
    ['kind']  # 'local_rigidity', 'stress'
)

# Trials whose outcome contradicted a later trial on the same graph
nongeneric_samples_total = Counter(
    'rigiditylab_nongeneric_samples_total',
    'Total number of samples suspected to be non-generic',
    ['operation']
)

# ============================================================================
# Oracle Metrics
# ============================================================================

oracle_starts_total = Counter(
    'rigiditylab_oracle_starts_total',
    'Total number of multi-start solver runs',
    ['status']  # 'converged', 'rejected'
)

# ============================================================================
# CLI Metrics
# ============================================================================

cli_commands_total = Counter(
    'rigiditylab_cli_commands_total',
    'Total number of CLI commands executed',
    ['command', 'exit_code']
)
