use super::{Field, Scalar};

/// Dense univariate polynomial in the spectral variable, coefficients
/// low-to-high with trailing zeros trimmed. The zero polynomial has an
/// empty coefficient list and degree `None`.
#[derive(Clone, PartialEq, Debug)]
pub struct UniPoly<T: Scalar> {
    coeffs: Vec<T>,
}

impl<T: Scalar> UniPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero_poly() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn one_poly() -> Self {
        Self::constant(T::one())
    }

    /// The monomial u.
    pub fn x() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    /// u - r.
    pub fn linear_root(r: &T) -> Self {
        Self::new(vec![r.clone().neg(), T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero_poly(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coeff(i).add_ref(&other.coeff(i)))
            .collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coeff(i).sub_ref(&other.coeff(i)))
            .collect();
        Self::new(coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone().neg()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero_poly() || other.is_zero_poly() {
            return Self::zero_poly();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero_poly();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul_ref(&T::from_int(i as i64)))
            .collect();
        Self::new(coeffs)
    }

    /// Product of (u - r) over the given roots.
    pub fn from_roots<I: IntoIterator<Item = T>>(roots: I) -> Self {
        let mut p = Self::one_poly();
        for r in roots {
            p = p.mul(&Self::linear_root(&r));
        }
        p
    }
}

impl<T: Field> UniPoly<T> {
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero_poly(),
            Some(l) => self.scale(&l.inv()),
        }
    }

    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero_poly(), "division by zero polynomial");
        let mut rem = self.clone();
        let dd = divisor.degree().unwrap();
        let lead_inv = divisor.leading().unwrap().inv();
        let mut quot = vec![T::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let q = rem.leading().unwrap().mul_ref(&lead_inv);
            let shift = rd - dd;
            quot[shift] = q.clone();
            let mut sub = vec![T::zero(); shift];
            sub.extend(divisor.coeffs.iter().map(|c| c.mul_ref(&q)));
            rem = rem.sub(&Self::new(sub));
        }
        (Self::new(quot), rem)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero_poly() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Ratio of two univariate polynomials with a nonzero denominator.
#[derive(Clone, Debug)]
pub struct RationalFunction<T: Scalar> {
    num: UniPoly<T>,
    den: UniPoly<T>,
}

impl<T: Scalar> RationalFunction<T> {
    pub fn new(num: UniPoly<T>, den: UniPoly<T>) -> Self {
        assert!(!den.is_zero_poly(), "zero denominator");
        RationalFunction { num, den }
    }

    pub fn one_rf() -> Self {
        Self::new(UniPoly::one_poly(), UniPoly::one_poly())
    }

    pub fn num(&self) -> &UniPoly<T> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<T> {
        &self.den
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// Exact equality as rational functions, by cross-multiplication;
    /// works over any integral-domain scalar, no gcd needed.
    pub fn equivalent(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl<T: Field> RationalFunction<T> {
    pub fn eval(&self, x: &T) -> T {
        self.num.eval(x).div_ref(&self.den.eval(x))
    }

    /// Canonical form: coprime numerator and denominator, monic
    /// denominator.
    pub fn reduce(&self) -> Self {
        if self.num.is_zero_poly() {
            return Self::new(UniPoly::zero_poly(), UniPoly::one_poly());
        }
        let g = self.num.gcd(&self.den);
        let (num, r1) = self.num.div_rem(&g);
        debug_assert!(r1.is_zero_poly());
        let (den, r2) = self.den.div_rem(&g);
        debug_assert!(r2.is_zero_poly());
        let lead_inv = den.leading().unwrap().inv();
        Self::new(num.scale(&lead_inv), den.scale(&lead_inv))
    }

    /// Residue at a simple pole of the reduced form: num(p) / den'(p).
    pub fn residue_at_simple_pole(&self, pole: &T) -> T {
        let r = self.reduce();
        assert!(r.den.eval(pole).is_zero(), "not a pole");
        let dp = r.den.derivative().eval(pole);
        r.num.eval(pole).div_ref(&dp)
    }

    /// First `order` coefficients of the expansion at infinity in powers
    /// of 1/u: f(u) = sum_{k>=1} c_k u^{-k}; returns [c_1, ..., c_order].
    /// Requires deg num < deg den.
    pub fn series_at_infinity(&self, order: usize) -> Vec<T> {
        let r = self.reduce();
        let d = r.den.degree().expect("nonzero denominator");
        assert!(
            r.num.degree().map_or(true, |n| n < d),
            "series requires a strictly proper rational function"
        );
        // den is monic after reduce; recurrence for c_k from
        // num = den * sum c_k u^{-k}.
        let mut cs: Vec<T> = Vec::with_capacity(order);
        for k in 1..=order {
            // coefficient of u^{d-k} in num equals
            // sum_{j=1}^{k} c_j * den[d - (k - j)]
            let target = r.num.coeff(d.saturating_sub(k));
            let target = if k > d { T::zero() } else { target };
            let mut acc = T::zero();
            for j in 1..k {
                if d + j < k {
                    continue;
                }
                acc = acc.add_ref(&cs[j - 1].mul_ref(&r.den.coeff(d + j - k)));
            }
            cs.push(target.sub_ref(&acc));
        }
        cs
    }
}

impl<T: Field> PartialEq for RationalFunction<T> {
    fn eq(&self, other: &Self) -> bool {
        self.equivalent(other)
    }
}
