//! Matrix text documents, seeded test-matrix generators and table emission.

mod decimal;
mod generate;
mod matrix_text;
mod rng;
mod table_text;

pub use decimal::{format_complex, format_real};
pub use generate::{generate, GeneratorKind, GeneratorSpec};
pub use matrix_text::{
    parse_document, parse_matrix, serialize_document, serialize_matrix, Layout, MatrixDocument, MatrixKind,
    HERMITIAN_RTOL,
};
pub use rng::{CounterRng, Stream};
pub use table_text::{read_table_csv, write_column, write_table, TableFormat};
