use crate::graph::Graph;

/// Largest color count the incremental searches handle (one bit per color).
pub const MAX_COLORS: u32 = 64;

/// Where a vertex stands under a partial coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexStatus {
    /// Not all incident edges colored and an interval is still reachable.
    Open,
    /// All incident edges colored, spectrum is an interval.
    Interval,
    /// Spectrum is not, or can no longer become, an interval.
    Never,
}

/// Per-vertex color sets of a partial coloring, kept as bitmasks so that
/// min, max, count and the interval test are all O(1).
#[derive(Debug, Clone)]
pub struct SpectrumState {
    masks: Vec<u64>,
    colored: Vec<u32>,
    degree: Vec<u32>,
}

impl SpectrumState {
    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        SpectrumState {
            masks: vec![0; n],
            colored: vec![0; n],
            degree: g.degrees().into_iter().map(|d| d as u32).collect(),
        }
    }

    #[inline]
    pub fn mask(&self, x: usize) -> u64 {
        self.masks[x]
    }

    #[inline]
    pub fn contains(&self, x: usize, color: u32) -> bool {
        self.masks[x] & bit(color) != 0
    }

    /// Records `color` at `x`. The color must not already be present.
    #[inline]
    pub fn add(&mut self, x: usize, color: u32) {
        debug_assert!(!self.contains(x, color));
        self.masks[x] |= bit(color);
        self.colored[x] += 1;
    }

    #[inline]
    pub fn remove(&mut self, x: usize, color: u32) {
        debug_assert!(self.contains(x, color));
        self.masks[x] &= !bit(color);
        self.colored[x] -= 1;
    }

    pub fn count(&self, x: usize) -> u32 {
        self.colored[x]
    }

    pub fn min(&self, x: usize) -> Option<u32> {
        let m = self.masks[x];
        (m != 0).then(|| m.trailing_zeros() + 1)
    }

    pub fn max(&self, x: usize) -> Option<u32> {
        let m = self.masks[x];
        (m != 0).then(|| 64 - m.leading_zeros())
    }

    /// Whether the current (possibly partial) set at `x` is an interval.
    pub fn is_interval(&self, x: usize) -> bool {
        match (self.min(x), self.max(x)) {
            (Some(lo), Some(hi)) => hi - lo + 1 == self.colored[x],
            _ => false,
        }
    }

    /// Classification used by the bounds. An open vertex whose current span
    /// already exceeds its degree can never close to an interval.
    #[inline]
    pub fn status(&self, x: usize) -> VertexStatus {
        let m = self.masks[x];
        if m == 0 {
            return VertexStatus::Open;
        }
        let span = 64 - m.leading_zeros() - m.trailing_zeros();
        let degree = self.degree[x];
        if self.colored[x] == degree {
            if span == degree {
                VertexStatus::Interval
            } else {
                VertexStatus::Never
            }
        } else if span > degree {
            VertexStatus::Never
        } else {
            VertexStatus::Open
        }
    }
}

#[inline]
fn bit(color: u32) -> u64 {
    debug_assert!((1..=MAX_COLORS).contains(&color));
    1u64 << (color - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    #[test]
    fn tracks_min_max_and_status() {
        let k4 = "complete:4".parse::<FamilySpec>().unwrap().generate();
        let mut s = SpectrumState::new(&k4);
        assert_eq!(s.status(0), VertexStatus::Open);
        s.add(0, 5);
        assert_eq!((s.min(0), s.max(0), s.count(0)), (Some(5), Some(5), 1));
        assert!(s.is_interval(0));
        s.add(0, 7);
        // span 3 == degree 3: a 6 could still close the gap
        assert_eq!(s.status(0), VertexStatus::Open);
        assert!(!s.is_interval(0));
        s.remove(0, 7);
        s.add(0, 8);
        assert_eq!(s.status(0), VertexStatus::Never);
        s.remove(0, 8);
        s.add(0, 6);
        s.add(0, 4);
        assert_eq!(s.status(0), VertexStatus::Interval);
        s.remove(0, 4);
        s.add(0, 64);
        assert_eq!(s.max(0), Some(64));
        assert_eq!(s.status(0), VertexStatus::Never);
    }
}
