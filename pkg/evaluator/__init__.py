from .tracking_evaluator import RunResult, rmse, position_errors, summarize, aggregate
from .result_io import emit, load_result, result_to_dict, result_from_dict, ResultIOError
