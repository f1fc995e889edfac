from prometheus_client import Counter, Gauge


# --- Construction Metrics ---
rings_constructed = Counter('ringlab_rings_constructed_total', 'Total number of constructed rings', ['kind'])
ideals_enumerated = Counter('ringlab_ideals_enumerated_total', 'Total number of ideals produced by enumeration')

# --- Localization Metrics ---
maxden_count = Gauge('ringlab_maxden_count', 'Number of maximal left denominator sets of a ring', ['ring'])
oracle_diffs = Counter('ringlab_oracle_diffs_total', 'Total number of oracle disagreements', ['oracle'])

# --- Verification Metrics ---
theorem_verdicts = Counter('ringlab_theorem_verdicts_total', 'Total number of theorem verdicts', ['theorem', 'outcome'])
