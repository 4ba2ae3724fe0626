use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The data fixing one group: `n` marked points, `L` punctures and `N` cone
/// points of orders `m[0..N]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupParams {
    n: u32,
    l: u32,
    cone_orders: Vec<u32>,
}

impl GroupParams {
    pub fn new(n: u32, l: u32, cone_orders: Vec<u32>) -> Result<Self> {
        if let Some(bad) = cone_orders.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidParams(format!("cone order {bad} is below 2")));
        }
        Ok(Self { n, l, cone_orders })
    }

    /// Parameters with every cone order set to 2. Convenient wherever the
    /// orders do not matter, which is everywhere outside `gamma` and `gpath`.
    pub fn with_default_orders(n: u32, l: u32, cones: u32) -> Self {
        Self {
            n,
            l,
            cone_orders: vec![2; cones as usize],
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn punctures(&self) -> u32 {
        self.l
    }

    pub fn cones(&self) -> u32 {
        self.cone_orders.len() as u32
    }

    pub fn cone_orders(&self) -> &[u32] {
        &self.cone_orders
    }

    /// Order of the cone point `nu` (1-based).
    pub fn cone_order(&self, nu: u32) -> Option<u32> {
        self.cone_orders.get((nu as usize).checked_sub(1)?).copied()
    }

    /// Same orbifold with one marked point fewer.
    pub fn forget_one(&self) -> Result<Self> {
        if self.n == 0 {
            return Err(Error::InvalidParams("no marked point to forget".into()));
        }
        Ok(Self {
            n: self.n - 1,
            ..self.clone()
        })
    }

    /// Same orbifold with one marked point more.
    pub fn add_one(&self) -> Self {
        Self {
            n: self.n + 1,
            ..self.clone()
        }
    }

    /// Rank of the free group pushed in at level `k`: `k - 1 + L + N`.
    pub fn free_rank(&self, k: u32) -> usize {
        (k as usize).saturating_sub(1) + self.l as usize + self.cone_orders.len()
    }

    /// All points of the quotient disk in real-axis order.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        let cones = (1..=self.cones()).rev().map(Point::Cone);
        let punctures = (1..=self.l).rev().map(Point::Puncture);
        let marked = (1..=self.n).map(Point::Marked);
        cones.chain(punctures).chain(marked)
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, L={}, N={}", self.n, self.l, self.cones())?;
        if !self.cone_orders.is_empty() {
            let m: Vec<String> = self.cone_orders.iter().map(u32::to_string).collect();
            write!(f, ", m={}", m.join(","))?;
        }
        write!(f, ")")
    }
}

/// A distinguished point of the quotient disk. Cone points sit at
/// `-L - nu`, punctures at `-lambda` and marked points at `j` on the real
/// axis; the derived ordering is that left-to-right order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Point {
    Cone(u32),
    Puncture(u32),
    Marked(u32),
}

impl Point {
    fn position(self) -> (u8, i64) {
        match self {
            Point::Cone(nu) => (0, -(nu as i64)),
            Point::Puncture(lambda) => (1, -(lambda as i64)),
            Point::Marked(j) => (2, j as i64),
        }
    }
}

impl Ord for Point {
    fn cmp(&self, other: &Self) -> Ordering {
        self.position().cmp(&other.position())
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_cone_orders() {
        assert!(GroupParams::new(1, 0, vec![2, 1]).is_err());
        assert!(GroupParams::new(0, 0, vec![]).is_ok());
    }

    #[test]
    fn points_follow_the_real_axis() {
        let p = GroupParams::with_default_orders(2, 2, 2);
        let pts: Vec<Point> = p.points().collect();
        assert_eq!(
            pts,
            vec![
                Point::Cone(2),
                Point::Cone(1),
                Point::Puncture(2),
                Point::Puncture(1),
                Point::Marked(1),
                Point::Marked(2),
            ]
        );
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
    }
}
