use std::collections::HashMap;

/// Uniform-grid bucket index over planar points.
#[derive(Debug, Clone)]
pub struct GridIndex {
    cell: f64,
    buckets: HashMap<(i64, i64), Vec<usize>>,
}

impl GridIndex {
    pub fn new(cell: f64) -> Self {
        assert!(cell > 0.0 && cell.is_finite(), "grid cell must be positive");
        Self {
            cell,
            buckets: HashMap::new(),
        }
    }

    pub fn from_points(cell: f64, points: &[[f64; 2]]) -> Self {
        let mut g = Self::new(cell);
        for (i, &p) in points.iter().enumerate() {
            g.insert(i, p);
        }
        g
    }

    pub fn cell(&self) -> f64 {
        self.cell
    }

    fn key(&self, p: [f64; 2]) -> (i64, i64) {
        ((p[0] / self.cell).floor() as i64, (p[1] / self.cell).floor() as i64)
    }

    pub fn insert(&mut self, id: usize, p: [f64; 2]) {
        self.buckets.entry(self.key(p)).or_default().push(id);
    }

    /// Ids in the cells that can contain points within `r` of `p`.
    pub fn candidates(&self, p: [f64; 2], r: f64) -> impl Iterator<Item = usize> + '_ {
        let reach = (r / self.cell).ceil() as i64;
        let (cx, cy) = self.key(p);
        (cx - reach..=cx + reach)
            .flat_map(move |x| (cy - reach..=cy + reach).map(move |y| (x, y)))
            .filter_map(|k| self.buckets.get(&k))
            .flatten()
            .copied()
    }

    /// Whether an indexed point lies within `r` of `p`.
    pub fn any_within(&self, coord: &impl Fn(usize) -> [f64; 2], p: [f64; 2], r: f64) -> bool {
        self.candidates(p, r).any(|i| dist(coord(i), p) <= r)
    }

    /// Nearest indexed point within `r` of `p` that `accept` allows.
    pub fn nearest_within(
        &self,
        coord: &impl Fn(usize) -> [f64; 2],
        p: [f64; 2],
        r: f64,
        accept: impl Fn(usize) -> bool,
    ) -> Option<usize> {
        let mut best: Option<(usize, f64)> = None;
        for i in self.candidates(p, r) {
            let d = dist(coord(i), p);
            if d <= r && accept(i) && best.is_none_or(|(j, b)| d < b || (d == b && i < j)) {
                best = Some((i, d));
            }
        }
        best.map(|(i, _)| i)
    }
}

pub(crate) fn dist(a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - b[0]).hypot(a[1] - b[1])
}
