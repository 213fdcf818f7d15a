//! Graph serialization and CSV reports.

pub mod edgelist;
pub mod graph6;
pub mod report;

pub use edgelist::{format_edge_list, parse_edge_list, EdgeListError};
pub use graph6::{encode_graph6, parse_graph6, parse_graph6_bytes, Graph6Error};
pub use report::{build_row, emit_report, parse_report, CsvRecord, ReportRow, CSV_HEADER};
