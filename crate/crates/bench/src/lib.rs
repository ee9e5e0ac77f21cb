//! Shared inputs for the criterion benches.

use seesaw_core::partitions::{labels_in_window, GeneralizedPartition};

/// Every polynomial label of the given width and size.
pub fn labels_of_size(width: usize, size: i64) -> Vec<GeneralizedPartition> {
    labels_in_window(width, 0, size, Some(size))
}
