#include "bilevel/qrseries.hpp"

#include <set>
#include <utility>

namespace bilevel {

namespace {

void accumulate(Slice& s, const Rational& rexp, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = s.try_emplace(rexp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) s.erase(it);
  }
}

void add_scaled_shifted(Slice& acc, const Slice& s, const Rational& factor, const Rational& shift) {
  for (const auto& [e, c] : s) accumulate(acc, e + shift, factor * c);
}

Rational effective_min(const QRSeries& a) { return a.is_zero() ? a.qprec() : a.min_qexp(); }

Rational product_precision(const QRSeries& a, const QRSeries& b) {
  return min(a.qprec() + effective_min(b), b.qprec() + effective_min(a));
}

}  // namespace

QRSeries QRSeries::constant(const Rational& c, const Rational& qprec) {
  QRSeries s(qprec);
  s.add_term(0, 0, c);
  return s;
}

std::size_t QRSeries::term_count() const {
  std::size_t n = 0;
  for (const auto& [q, s] : levels_) n += s.size();
  return n;
}

Rational QRSeries::coeff(const Rational& qexp, const Rational& rexp) const {
  if (qexp >= qprec_) {
    throw Error(ErrorKind::InsufficientPrecision,
                "q^" + qexp.str() + " requested, series trusted below q^" + qprec_.str());
  }
  auto it = levels_.find(qexp);
  if (it == levels_.end()) return 0;
  auto jt = it->second.find(rexp);
  return jt == it->second.end() ? Rational(0) : jt->second;
}

Slice QRSeries::slice(const Rational& qexp) const {
  if (qexp >= qprec_) {
    throw Error(ErrorKind::InsufficientPrecision,
                "q^" + qexp.str() + " slice requested, series trusted below q^" + qprec_.str());
  }
  auto it = levels_.find(qexp);
  return it == levels_.end() ? Slice{} : it->second;
}

const Rational& QRSeries::min_qexp() const {
  if (levels_.empty()) throw Error(ErrorKind::ZeroDivisor, "zero series has no leading exponent");
  return levels_.begin()->first;
}

void QRSeries::add_term(const Rational& qexp, const Rational& rexp, const Rational& c) {
  if (qexp >= qprec_ || c.is_zero()) return;
  auto& s = levels_[qexp];
  accumulate(s, rexp, c);
  if (s.empty()) levels_.erase(qexp);
}

void QRSeries::set_slice(const Rational& qexp, Slice s) {
  if (qexp >= qprec_) return;
  if (s.empty()) {
    levels_.erase(qexp);
  } else {
    levels_[qexp] = std::move(s);
  }
}

QRSeries QRSeries::truncated(const Rational& qprec) const {
  if (qprec > qprec_) {
    throw Error(ErrorKind::InsufficientPrecision,
                "cannot raise precision from " + qprec_.str() + " to " + qprec.str());
  }
  QRSeries r(qprec, weight_, index_);
  for (const auto& [q, s] : levels_) {
    if (q >= qprec) break;
    r.levels_.emplace(q, s);
  }
  return r;
}

QRSeries add(const QRSeries& a, const QRSeries& b) {
  QRSeries r(min(a.qprec(), b.qprec()), a.weight(), a.index());
  for (const auto* x : {&a, &b}) {
    for (const auto& [q, s] : x->levels()) {
      for (const auto& [e, c] : s) r.add_term(q, e, c);
    }
  }
  return r;
}

QRSeries negate(const QRSeries& a) { return scale(-1, a); }

QRSeries sub(const QRSeries& a, const QRSeries& b) { return add(a, negate(b)); }

QRSeries scale(const Rational& c, const QRSeries& a) {
  QRSeries r(a.qprec(), a.weight(), a.index());
  if (c.is_zero()) return r;
  for (const auto& [q, s] : a.levels()) {
    Slice t;
    for (const auto& [e, v] : s) t.emplace(e, c * v);
    r.set_slice(q, std::move(t));
  }
  return r;
}

Slice slice_mul(const Slice& a, const Slice& b) {
  Slice r;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) accumulate(r, ea + eb, ca * cb);
  }
  return r;
}

Slice slice_div(const Slice& num, const Slice& den) {
  if (den.empty()) throw Error(ErrorKind::ZeroDivisor, "division by the zero Laurent polynomial");
  Slice quo;
  if (num.empty()) return quo;
  const Rational lowest = num.begin()->first - den.begin()->first;
  const auto& [dtop, dlead] = *den.rbegin();
  Slice rem = num;
  while (!rem.empty()) {
    const auto [rtop, rlead] = *rem.rbegin();
    Rational e = rtop - dtop;
    if (e < lowest) {
      throw Error(ErrorKind::NonExactDivision,
                  "Laurent division leaves remainder " + slice_to_string(rem));
    }
    Rational c = rlead / dlead;
    quo.emplace(e, c);
    add_scaled_shifted(rem, den, -c, e);
  }
  return quo;
}

QRSeries mul_serial(const QRSeries& a, const QRSeries& b) {
  QRSeries r(product_precision(a, b), a.weight() + b.weight(), a.index() + b.index());
  for (const auto& [qa, sa] : a.levels()) {
    for (const auto& [qb, sb] : b.levels()) {
      Rational q = qa + qb;
      if (q >= r.qprec()) break;
      for (const auto& [ea, ca] : sa) {
        for (const auto& [eb, cb] : sb) r.add_term(q, ea + eb, ca * cb);
      }
    }
  }
  return r;
}

QRSeries mul_parallel(const QRSeries& a, const QRSeries& b) {
  QRSeries r(product_precision(a, b), a.weight() + b.weight(), a.index() + b.index());
  std::vector<const QRSeries::Levels::value_type*> la, lb;
  for (const auto& kv : a.levels()) la.push_back(&kv);
  for (const auto& kv : b.levels()) lb.push_back(&kv);

  std::map<Rational, std::vector<std::pair<std::size_t, std::size_t>>> plan;
  for (std::size_t i = 0; i < la.size(); ++i) {
    for (std::size_t j = 0; j < lb.size(); ++j) {
      Rational q = la[i]->first + lb[j]->first;
      if (q >= r.qprec()) break;
      plan[q].emplace_back(i, j);
    }
  }
  std::vector<std::pair<Rational, const std::vector<std::pair<std::size_t, std::size_t>>*>> tasks;
  for (const auto& [q, pairs] : plan) tasks.emplace_back(q, &pairs);
  std::vector<Slice> out(tasks.size());

  const long ntasks = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < ntasks; ++t) {
    Slice acc;
    for (const auto& [i, j] : *tasks[t].second) {
      for (const auto& [ea, ca] : la[i]->second) {
        for (const auto& [eb, cb] : lb[j]->second) accumulate(acc, ea + eb, ca * cb);
      }
    }
    out[t] = std::move(acc);
  }
  for (std::size_t t = 0; t < tasks.size(); ++t) r.set_slice(tasks[t].first, std::move(out[t]));
  return r;
}

QRSeries mul(const QRSeries& a, const QRSeries& b) {
#ifdef BILEVEL6_HAVE_OPENMP
  return mul_parallel(a, b);
#else
  return mul_serial(a, b);
#endif
}

QRSeries pow(const QRSeries& a, unsigned k) {
  if (k == 0) return QRSeries::constant(1, a.qprec());
  QRSeries result = a;
  for (unsigned i = 1; i < k; ++i) result = mul(result, a);
  return result;
}

QRSeries exact_div(const QRSeries& a, const QRSeries& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroDivisor, "exact division by the zero series");
  const Rational beta = b.min_qexp();
  const Rational alpha = effective_min(a);
  QRSeries c(min(a.qprec() - beta, b.qprec() + alpha - beta - beta), a.weight() - b.weight(),
             a.index() - b.index());
  const Slice& b0 = b.levels().begin()->second;
  std::vector<std::pair<Rational, const Slice*>> tail;
  for (auto it = std::next(b.levels().begin()); it != b.levels().end(); ++it) {
    tail.emplace_back(it->first - beta, &it->second);
  }

  std::set<Rational> pending;
  for (const auto& [q, s] : a.levels()) pending.insert(q - beta);
  while (!pending.empty()) {
    Rational e = *pending.begin();
    pending.erase(pending.begin());
    if (e >= c.qprec()) break;
    Slice residual;
    auto at = a.levels().find(e + beta);
    if (at != a.levels().end()) residual = at->second;
    for (const auto& [delta, bs] : tail) {
      auto ct = c.levels().find(e - delta);
      if (ct == c.levels().end()) continue;
      for (const auto& [eb, cb] : *bs) {
        for (const auto& [ec, cc] : ct->second) accumulate(residual, eb + ec, -(cb * cc));
      }
    }
    if (residual.empty()) continue;
    Slice q;
    try {
      q = slice_div(residual, b0);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NonExactDivision) throw;
      throw Error(ErrorKind::NonExactDivision, "at q^" + e.str() + ": " + err.what());
    }
    c.set_slice(e, std::move(q));
    for (const auto& [delta, bs] : tail) pending.insert(e + delta);
  }
  return c;
}

std::string slice_to_string(const Slice& s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : s) {
    bool neg = c.sign() < 0;
    Rational mag = abs(c);
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (e.is_zero()) {
      out += mag.str();
      continue;
    }
    if (mag != Rational(1)) out += mag.str() + "*";
    out += e == Rational(1) ? "r" : "r^" + e.str();
  }
  return out;
}

}  // namespace bilevel
