"""Shared parameters for the CSV and JSON interchange formats."""

csv_columns = (
    'param', 'a_m', 'n', 'K_m', 'xi', 'E_J', 'E_over_V0', 'P_N', 'dEdP_m',
    'R', 'flags'
)
csv_header = ','.join(csv_columns)
flag_separator = ';'

# Row flags
near_pole_flag = 'near_pole'
boundary_flag = 'boundary'
error_flag_prefix = 'error:'

# Coefficients document keys
coefficients_key = 'c'
sigma_key = 'sigma'
source_key = 'source'
grid_key = 'grid'

source_paper = 'paper'
source_refit = 'refit'

# Exit codes
exit_ok = 0
exit_domain_error = 1
exit_numerical_failure = 2
exit_usage = 3
