//! Plain-text pictures of Young diagrams, English convention.

use crate::partition::Partition;
use crate::skew::SkewShape;

const BOX: char = '▪';

/// One line per row, `▪` per box, leading blanks for the skipped part of a
/// skew row, no trailing blanks. The empty diagram renders as `(empty)`.
pub fn render_partition(lambda: &Partition) -> String {
    render_skew(&SkewShape::straight(lambda))
}

pub fn render_skew(shape: &SkewShape) -> String {
    if shape.is_empty() {
        return "(empty)".to_string();
    }
    shape
        .rows()
        .iter()
        .map(|&[lo, hi]| {
            let mut line = " ".repeat(lo);
            line.extend(std::iter::repeat_n(BOX, hi - lo));
            line.trim_end().to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pictures() {
        assert_eq!(render_partition(&"2,1".parse().unwrap()), "▪▪\n▪");
        assert_eq!(render_skew(&"2,2 / 1".parse().unwrap()), " ▪\n▪▪");
        assert_eq!(render_partition(&Partition::empty()), "(empty)");
        assert_eq!(render_skew(&"2,1,1 / 1,1".parse().unwrap()), " ▪\n\n▪");
        assert_eq!(render_skew(&"3,3 / 1".parse().unwrap()), " ▪▪\n▪▪▪");
    }
}
