//! The two published data tables, their recomputation, and the Pearson
//! correlation and least-squares summaries printed alongside them.

mod analysis;
mod correlation;
mod regression;
mod series;
mod tables;

pub use analysis::{
    reproduce_correlation, reproduce_regression, table1_columns, table2_columns,
    CorrelationReproduction, PrintedRegression, RegressionAttempt, MATRIX_TOLERANCE,
    PRINTED_MATRIX_1, PRINTED_MATRIX_2, PRINTED_REGRESSION_1, PRINTED_REGRESSION_2,
    R_SQUARED_TOLERANCE,
};
pub use correlation::{correlation_matrix, Column, CorrelationMatrix, EntryComparison};
pub use regression::{ols_fit, predict_linear, OlsFit};
pub use series::{figure_series, Series, FAMILY_SERIES_MAX_N};
pub use tables::{
    eta, reproduce_table, t1, t2, table_rows, CellReport, CellStatus, ReproductionReport,
    Table1Row, Table2Row, TableId, DECIMAL_CELL_TOLERANCE, REPORT_CSV_HEADER, TABLE1, TABLE2,
};
