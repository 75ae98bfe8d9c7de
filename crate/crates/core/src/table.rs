//! Rectangular bidegree windows and tables of dimensions over them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::Bidegree;

/// The box `[a_min, a_max] × [b_min, b_max]`, bounds inclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub a_min: i64,
    pub a_max: i64,
    pub b_min: i64,
    pub b_max: i64,
}

impl Window {
    pub fn new(a_min: i64, a_max: i64, b_min: i64, b_max: i64) -> Result<Self> {
        if a_min > a_max || b_min > b_max {
            return Err(Error::BadWindow(format!("{a_min}:{a_max},{b_min}:{b_max}")));
        }
        Ok(Window {
            a_min,
            a_max,
            b_min,
            b_max,
        })
    }

    /// `[-r, r]²`.
    pub fn square(r: i64) -> Self {
        Window::new(-r, r, -r, r).expect("nonempty")
    }

    pub fn width(&self) -> usize {
        (self.a_max - self.a_min + 1) as usize
    }

    pub fn height(&self) -> usize {
        (self.b_max - self.b_min + 1) as usize
    }

    pub fn len(&self) -> usize {
        self.width() * self.height()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, d: Bidegree) -> bool {
        (self.a_min..=self.a_max).contains(&d.a) && (self.b_min..=self.b_max).contains(&d.b)
    }

    /// Cells in row-major order: `a` outer, `b` inner.
    pub fn cells(&self) -> impl Iterator<Item = Bidegree> + '_ {
        (self.a_min..=self.a_max)
            .flat_map(move |a| (self.b_min..=self.b_max).map(move |b| Bidegree::new(a, b)))
    }

    pub fn negated(&self) -> Window {
        Window {
            a_min: -self.a_max,
            a_max: -self.a_min,
            b_min: -self.b_max,
            b_max: -self.b_min,
        }
    }

    /// Largest absolute coordinate in the window.
    pub fn radius(&self) -> i64 {
        [self.a_min, self.a_max, self.b_min, self.b_max]
            .iter()
            .map(|v| v.abs())
            .max()
            .expect("four entries")
    }

    fn index(&self, d: Bidegree) -> usize {
        ((d.a - self.a_min) as usize) * self.height() + (d.b - self.b_min) as usize
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{},{}:{}", self.a_min, self.a_max, self.b_min, self.b_max)
    }
}

impl FromStr for Window {
    type Err = Error;

    /// Parses `aMin:aMax,bMin:bMax`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadWindow(s.to_string());
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        let range = |r: &str| -> Result<(i64, i64)> {
            let (lo, hi) = r.split_once(':').ok_or_else(bad)?;
            let lo = lo.trim().parse().map_err(|_| bad())?;
            let hi = hi.trim().parse().map_err(|_| bad())?;
            Ok((lo, hi))
        };
        let (a_min, a_max) = range(a)?;
        let (b_min, b_max) = range(b)?;
        Window::new(a_min, a_max, b_min, b_max).map_err(|_| bad())
    }
}

/// Exact dimensions `dim V_d` for every `d` in a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimTable {
    window: Window,
    cells: Vec<u64>,
}

impl DimTable {
    pub fn zeros(window: Window) -> Self {
        DimTable {
            window,
            cells: vec![0; window.len()],
        }
    }

    /// Fills a table by evaluating `f` at every cell, in parallel.
    pub fn from_fn<F>(window: Window, f: F) -> Self
    where
        F: Fn(Bidegree) -> u64 + Sync,
    {
        use rayon::prelude::*;
        let cells: Vec<Bidegree> = window.cells().collect();
        DimTable {
            window,
            cells: cells.par_iter().map(|&d| f(d)).collect(),
        }
    }

    pub fn try_from_fn<F>(window: Window, f: F) -> Result<Self>
    where
        F: Fn(Bidegree) -> Result<u64> + Sync,
    {
        use rayon::prelude::*;
        let cells: Vec<Bidegree> = window.cells().collect();
        Ok(DimTable {
            window,
            cells: cells.par_iter().map(|&d| f(d)).collect::<Result<_>>()?,
        })
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn get(&self, d: Bidegree) -> Option<u64> {
        self.window.contains(d).then(|| self.cells[self.window.index(d)])
    }

    /// Value at `d`, which must lie in the window.
    pub fn at(&self, d: Bidegree) -> u64 {
        self.get(d).unwrap_or_else(|| panic!("{d} outside window {}", self.window))
    }

    pub fn set(&mut self, d: Bidegree, v: u64) {
        let i = self.window.index(d);
        self.cells[i] = v;
    }

    pub fn iter(&self) -> impl Iterator<Item = (Bidegree, u64)> + '_ {
        self.window.cells().zip(self.cells.iter().copied())
    }

    pub fn is_zero(&self) -> bool {
        self.cells.iter().all(|&v| v == 0)
    }

    /// The table of the graded dual: cell `(a,b)` holds cell `(-a,-b)`.
    pub fn flipped(&self) -> DimTable {
        let window = self.window.negated();
        DimTable::from_fn(window, |d| self.at(-d))
    }

    /// Rows `b = b_max` down to `b_min`, columns `a = a_min..a_max`, aligned.
    pub fn render(&self) -> String {
        let w = self.window;
        let width = self
            .cells
            .iter()
            .map(|v| v.to_string().len())
            .chain([w.a_min.to_string().len(), w.a_max.to_string().len()])
            .max()
            .unwrap_or(1);
        let label = w.b_min.to_string().len().max(w.b_max.to_string().len()).max(3);
        let mut out = format!("{:>label$} |", "b\\a");
        for a in w.a_min..=w.a_max {
            out += &format!(" {a:>width$}");
        }
        out.push('\n');
        out += &"-".repeat(label + 2 + (width + 1) * w.width());
        out.push('\n');
        for b in (w.b_min..=w.b_max).rev() {
            out += &format!("{b:>label$} |");
            for a in w.a_min..=w.a_max {
                out += &format!(" {:>width$}", self.at(Bidegree::new(a, b)));
            }
            out.push('\n');
        }
        out
    }

    /// `a,b,dim` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("a,b,dim\n");
        for (d, v) in self.iter() {
            out += &format!("{},{},{}\n", d.a, d.b, v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_parsing() {
        let w: Window = "-6:0,0:6".parse().unwrap();
        assert_eq!(w, Window::new(-6, 0, 0, 6).unwrap());
        assert_eq!(w.len(), 49);
        assert!("3:1,0:0".parse::<Window>().is_err());
        assert!("0:1".parse::<Window>().is_err());
        assert!("a:1,0:0".parse::<Window>().is_err());
    }

    #[test]
    fn flip_is_an_involution() {
        let w = Window::new(-1, 2, 0, 3).unwrap();
        let t = DimTable::from_fn(w, |d| (d.a * 10 + d.b + 100) as u64);
        let f = t.flipped();
        assert_eq!(f.window(), Window::new(-2, 1, -3, 0).unwrap());
        assert_eq!(f.at(Bidegree::new(-2, -3)), t.at(Bidegree::new(2, 3)));
        assert_eq!(f.flipped(), t);
        assert!(DimTable::zeros(w).flipped().is_zero());
    }

    #[test]
    fn csv_has_header_and_all_cells() {
        let t = DimTable::from_fn(Window::new(0, 1, 0, 1).unwrap(), |d| d.a as u64);
        let csv = t.to_csv();
        assert!(csv.starts_with("a,b,dim\n"));
        assert_eq!(csv.lines().count(), 5);
        assert!(csv.contains("1,0,1\n"));
    }
}
