//! Scalar abstraction and planar vector math.
//!
//! Everything numeric in this crate is generic over [`Real`], which is
//! implemented for `f32` and `f64`. The crate root exposes `f64` aliases for
//! the common types.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{Float, FromPrimitive, NumAssign};
use rand::distributions::uniform::SampleUniform;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Floating-point scalar the library is generic over.
pub trait Real:
    Float
    + FromPrimitive
    + NumAssign
    + SampleUniform
    + Sum
    + Serialize
    + DeserializeOwned
    + Default
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
    /// Conversion from an `f64` constant.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("constant not representable in scalar type")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar not convertible to f64")
    }

    /// Conversion from a count or index.
    fn of_usize(v: usize) -> Self {
        Self::from_usize(v).expect("count not representable in scalar type")
    }

    fn clamp01(self) -> Self {
        self.max(Self::zero()).min(Self::one())
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Planar point/vector in meters. Ego frame: `x` forward, `y` left.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Vec2<T> {
    pub x: T,
    pub y: T,
}

impl<T: Real> Vec2<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }

    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3-D cross product.
    pub fn cross(self, o: Self) -> T {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> T {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(self) -> T {
        self.x * self.x + self.y * self.y
    }

    pub fn dist(self, o: Self) -> T {
        (self - o).norm()
    }

    /// Rotate counter-clockwise by `yaw` radians.
    pub fn rotate(self, yaw: T) -> Self {
        let (s, c) = yaw.sin_cos();
        Self::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn heading(self) -> T {
        self.y.atan2(self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn scale(self, k: T) -> Self {
        Self::new(self.x * k, self.y * k)
    }
}

impl<T: Real> Add for Vec2<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }
}

impl<T: Real> Sub for Vec2<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }
}

impl<T: Real> Neg for Vec2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl<T: Real> Mul<T> for Vec2<T> {
    type Output = Self;
    fn mul(self, k: T) -> Self {
        self.scale(k)
    }
}

impl<T: Real> AddAssign for Vec2<T> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<T: Real> SubAssign for Vec2<T> {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

// Serialized as a bare `[x, y]` pair; keeps waypoint and map-point lists
// compact in the JSON interchange formats.
impl<T: Serialize> Serialize for Vec2<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (&self.x, &self.y).serialize(s)
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Vec2<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (x, y) = <(T, T)>::deserialize(d)?;
        Ok(Self { x, y })
    }
}

/// Wrap an angle to `(-pi, pi]`.
pub fn wrap_angle<T: Real>(a: T) -> T {
    let pi = T::of(std::f64::consts::PI);
    let tau = T::of(std::f64::consts::TAU);
    let mut w = a % tau;
    if w <= -pi {
        w += tau;
    } else if w > pi {
        w -= tau;
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vec2_ops() {
        let a = Vec2::new(3.0, 4.0);
        assert_eq!(a.norm(), 5.0);
        assert_eq!(a.dot(Vec2::new(1.0, 0.0)), 3.0);
        assert_eq!(a.cross(Vec2::new(1.0, 0.0)), -4.0);
        let r = Vec2::new(1.0, 0.0).rotate(std::f64::consts::FRAC_PI_2);
        assert!((r.x).abs() < 1e-15 && (r.y - 1.0).abs() < 1e-15);
    }

    #[test]
    fn vec2_json_roundtrip() {
        let a = Vec2::new(1.5f64, -2.25);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, "[1.5,-2.25]");
        let b: Vec2<f64> = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn wrap_angle_range() {
        for k in -8..=8 {
            let a = 0.3 + (k as f64) * std::f64::consts::TAU;
            assert!((wrap_angle(a) - 0.3).abs() < 1e-12);
        }
        assert!((wrap_angle(std::f64::consts::PI) - std::f64::consts::PI).abs() < 1e-15);
        assert!((wrap_angle(-std::f64::consts::PI) - std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn works_for_f32() {
        let a: Vec2<f32> = Vec2::new(3.0, 4.0);
        assert!((a.norm() - 5.0).abs() < 1e-6);
        assert_eq!(f32::of(0.5), 0.5f32);
    }
}
