//! Fast counting paths: recurrences, closed forms and restricted table walks.

mod avoid123;
mod avoid321;
mod closed;
mod gorenstein;
mod memo;

pub use avoid123::{count_i123, count_i123_by_subtraction, PrintedRecurrence123, I123_BOUND};
pub use avoid321::{avoid321_a, count_i321, Avoid321Table};
pub use closed::{
    closed_form, closed_form_sequence, distinct_partition_numbers, divisor_count, is_triangular,
    partition_numbers, unique_avoider_231_321, ClosedFormFamily,
};
pub use gorenstein::{gorenstein_count, GorensteinTable, Summation};
pub use memo::MemoTable;
