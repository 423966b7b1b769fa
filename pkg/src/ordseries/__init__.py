"""Indexed, totally ordered observation series.

One data model covers irregular and regular series: a strictly increasing
index of any supported kind paired with columns of optional real cells, with
an optional frequency annotation for data on a regular grid.
"""

from .arith import Table, cumulate, diff_by, lag_by, map_cells, transpose_to_table, zip_op
from .combine import MergeSpec, aggregate_by, concat_rows, merge, merge_aligned
from .errors import (BoundsError, CapabilityError, DomainError, DuplicateIndex, EmptyError,
                     FrequencyMismatch, KindMismatch, NotRegular, OrderError, OrdSeriesError,
                     OverlapError, ParseError, ShapeError)
from .index import (DateIndex, IndexValue, IntIndex, RealIndex, TimestampIndex, YearMonth,
                    YearQuarter, as_index, date_to_yearmonth, date_to_yearquarter, first_of_month,
                    yearmonth_from_real, yearmonth_to_date, yearmonth_to_quarter,
                    yearquarter_from_real, yearquarter_to_date)
from .io import dumps_csv, dumps_grid, loads_csv, loads_grid, read_csv, read_grid, write_csv
from .missing import FillPolicy, drop_missing, fill_interp, fill_locf, longest_complete_run
from .regular import (RegularGrid, attach_frequency, cycle, deltat, drop_frequency, frequency,
                      from_grid, infer_frequency, is_regular, make_regular, render_grid, to_grid)
from .rolling import RollSpec, roll_apply, roll_max, roll_mean, roll_median
from .series import (Frame, Series, coredata, end_of, head_n, index_of, make_frame, make_series,
                     render, set_coredata, set_index, set_time, set_window, start_of, summarize,
                     tail_n, take_index, take_positions, time_of, window)

__version__ = "0.1.0"
