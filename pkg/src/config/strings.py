"""User-visible messages, rationales and lint texts."""

# Lint messages
SSP_ONLY_MESSAGE = (
    "Solution-set plotting is the only evaluation method; plots cannot separate close sets "
    "and give no reproducible number."
)
SSP_HIGH_DIM_MESSAGE = (
    "Scatter plots were requested for {m} objectives; sets with more than {limit} objectives "
    "cannot be shown by scatter plot, use parallel coordinates."
)
DOE_SOLE_MESSAGE = (
    "Descriptive statistics ({stats}) of objective values are the only comparison; they can "
    "rank a dominated set ahead of the set that dominates it."
)
ASPECT_GAP_MESSAGE = (
    "Chosen indicators do not cover {missing}; without preferences every quality aspect "
    "should be reflected."
)
SPREAD_DIM_MESSAGE = "Spread (Delta) only works reliably on bi-objective problems, got m={m}."
HV_DIM_MESSAGE = "Exact hypervolume is limited to {limit} objectives, got m={m}."
IGD_REFSET_MESSAGE = (
    "{indicators} against the combined front of the compared sets: a known front of uniformly "
    "distributed points is needed and the ranking depends on which sets are compared."
)
HV_REFPOINT_MESSAGE = (
    "Hypervolume reference point strategy '{strategy}' may overemphasize boundary solutions; "
    "prefer nadir + range/10 or nadir + range/h."
)
NFS_DUPLICATES_MESSAGE = (
    "NFS counts duplicate solutions; a set full of duplicates is rated well. Pair it with UNFR."
)
NO_COMPLIANT_MESSAGE = (
    "None of the chosen indicators is Pareto compliant; a dominated set may be ranked better."
)
NORMALIZATION_MESSAGE = (
    "{indicators} need normalized objectives but normalization is disabled."
)
PREF_IGNORED_CLEAR_MESSAGE = (
    "Clear preferences are declared but not transferred into the solution sets before evaluation."
)
PREF_IGNORED_VAGUE_MESSAGE = (
    "Vague preferences are declared but not transferred into the solution sets before evaluation."
)
KNEE_MISMATCH_MESSAGE = (
    "{indicator} does not reflect a preference for knee points; use hypervolume with "
    "nadir + range/10."
)
EXTREME_MISMATCH_MESSAGE = (
    "IGD does not reflect a preference for extreme solutions; compare best values and use "
    "hypervolume with a doubled range."
)

# Plan rationales (each names the decision node it comes from)
NOTHING_LEFT_MESSAGE = (
    "All {m} objectives must take exactly their best value; no objective is left to compare the sets on."
)
RATIONALE_SCREEN = "P1: filter out trivial solutions before evaluation."
RATIONALE_CLEAR = "D6/P2: transfer clear preferences into the solution sets."
RATIONALE_BEST_SINGLE = (
    "D6/P2: after the clear transfer only '{objective}' remains; compare sets by its best value."
)
RATIONALE_WEIGHTS = "D6/P2: weights are given; find the fittest solution by the weighted sum."
RATIONALE_VAGUE = "D7/P3: transfer vague preferences by clamping values beyond saturation."
RATIONALE_UNTRANSFERABLE = (
    "D9: qualitative preferences cannot be transferred; treat as a general multi-objective case."
)
RATIONALE_NO_INDICATOR_TRANSFER = "D10: preferences are not transferred into an indicator."
RATIONALE_KNEE_HV = "D11: knee region of interest; hypervolume with nadir + range/10 favours knee points."
RATIONALE_KNEE_EPS = "D11: epsilon indicator as a second Pareto-compliant view of the knee preference."
RATIONALE_KNEE_IGD_EXCLUDED = (
    "D11: IGD excluded, it does not reflect a preference for knee points (Issue V)."
)
RATIONALE_EXTREME_HV = "D11: extreme region of interest; hypervolume with a doubled range favours boundary solutions."
RATIONALE_EXTREME_BEST = "D11: compare best values of '{objective}' for the extreme preference."
RATIONALE_CONVERGENCE = "D3: GD+ reflects convergence and is Pareto compliant."
RATIONALE_SPREAD_2D = "D4: Spread (Delta) reflects spread and uniformity of bi-objective sets."
RATIONALE_SPREAD_GRID = "D4: grid diversity reflects spread for three or more objectives."
RATIONALE_SPREAD_NO_FRONT = (
    "D4: grid diversity reflects spread; Spread (Delta) needs the extremes of a known Pareto front."
)
RATIONALE_CARDINALITY = "D5: UNFR reflects cardinality and ignores duplicates."
RATIONALE_HV = "D2: hypervolume as the comprehensive indicator."
RATIONALE_EPS_HIGH_DIM = "D2: epsilon indicator as the comprehensive indicator; exact hypervolume is too costly for m={m}."
RATIONALE_NORMALIZE = "Normalize objectives over the combined front before computing indicators."
RATIONALE_PSI = "D13: add problem-specific indicators if the domain defines any."
RATIONALE_PLOT_SCATTER = "D14: plot representative runs as scatter plots."
RATIONALE_PLOT_PARALLEL = "D14: plot representative runs with parallel coordinates."

# Preprocessing and evaluation log messages
SCREEN_REMOVED_MESSAGE = "Set '{set_name}': removed solution {solution} violating {rule}"
SCREEN_EMPTY_MESSAGE = "Set '{set_name}': every solution was removed by screening"
CLEAR_EMPTY_MESSAGE = "Set '{set_name}': no solution satisfies the clear preferences"
DEGENERATE_NORMALIZATION_MESSAGE = (
    "Objective {objective}: ideal equals nadir ({value}); normalized to 0"
)
OUT_OF_BOUNDS_MESSAGE = "Set '{set_name}': {count} values fall outside the normalization bounds"
DEGENERATE_RANGE_MESSAGE = "Objective {objective}: zero range on the reference front; reference point uses nadir + 1"
EXPLICIT_REFPOINT_MESSAGE = "Explicit reference point {point} does not exceed the front nadir {nadir}"
COMPUTE_H_FALLBACK_MESSAGE = "No h >= 1 satisfies the binomial rule for n={n}, m={m}; using h=1"
SPREAD_EXTREMES_MESSAGE = "Spread extremes taken from the combined front: {extremes}"
EMPTY_CSV_MESSAGE = "File {path} contains no solutions"
RESURVIVOR_BOUNDS_MESSAGE = (
    "Normalization bounds were recomputed over the solutions that survived the clear preferences"
)

# Report text
REPORT_TITLE = "Solution-set evaluation report"
PLAN_HEADER = "Evaluation plan"
PREPROCESSING_HEADER = "Preprocessing"
INDICATORS_HEADER = "Indicators"
DOE_HEADER = "Descriptive statistics"
NOTES_HEADER = "Notes"
LINT_HEADER = "Lint findings"
NO_LINT_MESSAGE = "No findings."
RANKING_HEADER = "Ranking"
REPRESENTATIVE_HEADER = "Representative runs"
COMPARE_HEADER = "Pairwise comparison: {indicator}"
MISLEADING_MESSAGE = "misleading: contradicts set dominance"

# CLI command descriptions
EVALUATE_DESCRIPTION = "Run the evaluation plan over every algorithm and run"
COMPARE_DESCRIPTION = "Compare two sets with a binary indicator in both orders"
RECOMMEND_DESCRIPTION = "Print the recommended evaluation plan"
LINT_DESCRIPTION = "Check the chosen evaluation setup for known misuses"
STATS_DESCRIPTION = "Print descriptive objective statistics per run"
PLOT_DATA_DESCRIPTION = "Write plot data for the representative runs"

FATAL_ERROR_MESSAGE = "Error: {error}"
