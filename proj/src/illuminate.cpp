#include "capb/illuminate.hpp"

#include <atomic>
#include <climits>
#include <cmath>
#include <optional>
#include <thread>
#include <vector>

#include "capb/rational.hpp"

namespace capb {

namespace {

// Dense two-phase primal simplex over exact rationals with Bland's rule:
// maximize c·x subject to A x = b, x >= 0.  Returns nullopt when infeasible.
// Sizes here are tiny (4 rows, |directions| + 2 columns), so the emphasis is
// on being obviously correct rather than fast.
class Simplex {
 public:
  Simplex(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
          std::vector<Rational> c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)),
        m_(static_cast<int>(b_.size())), n_(static_cast<int>(c_.size())) {}

  std::optional<Rational> solve() {
    // Make the right-hand side nonnegative, then add one artificial per row.
    for (int i = 0; i < m_; ++i) {
      if (b_[i] < 0) {
        b_[i] = -b_[i];
        for (auto& v : a_[i]) v = -v;
      }
    }
    for (int i = 0; i < m_; ++i) {
      for (int r = 0; r < m_; ++r) {
        a_[r].push_back(Rational(r == i ? 1 : 0));
      }
    }
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) basis_[i] = n_ + i;

    // Phase 1: maximize -sum(artificials).
    std::vector<Rational> phase1(n_ + m_, Rational(0));
    for (int i = 0; i < m_; ++i) phase1[n_ + i] = Rational(-1);
    run(phase1, n_ + m_);
    if (objective(phase1) < 0) return std::nullopt;

    // Phase 2: real objective; artificial columns are barred from entering
    // (ones still basic sit at value zero and stay harmless).
    std::vector<Rational> phase2 = c_;
    phase2.resize(n_ + m_, Rational(0));
    run(phase2, n_);
    return objective(phase2);
  }

 private:
  Rational objective(const std::vector<Rational>& c) const {
    Rational v = 0;
    for (int i = 0; i < m_; ++i) v += c[basis_[i]] * b_[i];
    return v;
  }

  void run(const std::vector<Rational>& c, int enter_limit) {
    for (;;) {
      int e = -1;
      for (int j = 0; j < enter_limit && e < 0; ++j) {
        Rational red = c[j];
        for (int i = 0; i < m_; ++i) red -= c[basis_[i]] * a_[i][j];
        if (red > 0) e = j;  // Bland: first improving column
      }
      if (e < 0) return;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        if (a_[i][e] > 0) {
          Rational ratio = b_[i] / a_[i][e];
          if (leave < 0 || ratio < best ||
              (ratio == best && basis_[i] < basis_[leave])) {
            leave = i;
            best = ratio;
          }
        }
      }
      if (leave < 0) {
        throw Error("unbounded linear program (hull check invariant broken)");
      }
      pivot(leave, e);
    }
  }

  void pivot(int r, int e) {
    Rational p = a_[r][e];
    for (auto& v : a_[r]) v /= p;
    b_[r] /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      Rational f = a_[i][e];
      if (f == 0) continue;
      for (int j = 0; j < static_cast<int>(a_[i].size()); ++j) {
        a_[i][j] -= f * a_[r][j];
      }
      b_[i] -= f * b_[r];
    }
    basis_[r] = e;
  }

  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<Rational> c_;
  int m_, n_;
  std::vector<int> basis_;
};

int rational_rank3(const std::vector<std::vector<Rational>>& cols) {
  // Gaussian elimination on a 3 x k matrix given by columns.
  std::vector<std::vector<Rational>> rows(3,
                                          std::vector<Rational>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (int i = 0; i < 3; ++i) rows[i][j] = cols[j][i];
  }
  int rank = 0;
  std::size_t col = 0;
  while (rank < 3 && col < cols.size()) {
    int piv = -1;
    for (int i = rank; i < 3; ++i) {
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) {
      ++col;
      continue;
    }
    std::swap(rows[rank], rows[piv]);
    for (int i = rank + 1; i < 3; ++i) {
      if (rows[i][col] == 0) continue;
      Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < cols.size(); ++j) {
        rows[i][j] -= f * rows[rank][j];
      }
    }
    ++rank;
    ++col;
  }
  return rank;
}

}  // namespace

bool cap_illuminated_by(const Cap& c, const UnitVector& v) {
  return dot(c.center, v) < -std::sin(c.radius);
}

bool positive_hull_spans(const DirectionSet& dirs) {
  const std::size_t k = dirs.directions.size();
  if (k == 0) return false;

  // Exact rational images of the coordinates (doubles convert exactly).
  std::vector<std::vector<Rational>> v(k, std::vector<Rational>(3));
  for (std::size_t i = 0; i < k; ++i) {
    v[i][0] = Rational(dirs.directions[i].x());
    v[i][1] = Rational(dirs.directions[i].y());
    v[i][2] = Rational(dirs.directions[i].z());
  }

  // A positive combination with all-positive coefficients summing to zero
  // puts the origin in the relative interior of the hull; interior in E^3
  // additionally needs full linear span.
  if (rational_rank3(v) < 3) return false;

  // max ε  s.t.  sum λ_i v_i = 0, sum λ_i = 1, λ_i >= ε.  Substituting
  // s_i = λ_i - ε >= 0 and splitting the free ε = ε+ - ε- gives equality
  // standard form with columns s_1..s_k, ε+, ε-.
  std::vector<Rational> vbar(3, Rational(0));
  for (std::size_t i = 0; i < k; ++i) {
    for (int j = 0; j < 3; ++j) vbar[j] += v[i][j];
  }
  std::vector<std::vector<Rational>> a(4, std::vector<Rational>(k + 2));
  std::vector<Rational> b(4, Rational(0));
  std::vector<Rational> c(k + 2, Rational(0));
  for (int j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < k; ++i) a[j][i] = v[i][j];
    a[j][k] = vbar[j];
    a[j][k + 1] = -vbar[j];
  }
  for (std::size_t i = 0; i < k; ++i) a[3][i] = Rational(1);
  a[3][k] = Rational(static_cast<long>(k));
  a[3][k + 1] = Rational(-static_cast<long>(k));
  b[3] = Rational(1);
  c[k] = Rational(1);
  c[k + 1] = Rational(-1);

  auto eps = Simplex(std::move(a), std::move(b), std::move(c)).solve();
  if (!eps) return false;
  return *eps > make_rational(1, 1000000000);
}

std::vector<int> unlit_caps(const CapBody& body, const DirectionSet& dirs) {
  std::vector<int> unlit;
  for (std::size_t i = 0; i < body.size(); ++i) {
    bool lit = false;
    for (const UnitVector& v : dirs.directions) {
      if (cap_illuminated_by(body.caps()[i], v)) {
        lit = true;
        break;
      }
    }
    if (!lit) unlit.push_back(static_cast<int>(i));
  }
  return unlit;
}

RotationSearchResult search_rotation(const CapBody& body, long budget,
                                     std::uint64_t seed, int threads) {
  if (budget < 1) throw DomainError("rotation search budget must be >= 1");
  const auto tetra = tetrahedron();
  const std::size_t m = body.size();
  std::vector<Vec3> centers(m);
  std::vector<double> sin_r(m);
  for (std::size_t i = 0; i < m; ++i) {
    centers[i] = body.caps()[i].center.vec();
    sin_r[i] = std::sin(body.caps()[i].radius);
  }

  constexpr long kChunk = 1024;
  const long n_chunks = (budget + kChunk - 1) / kChunk;
  struct ChunkBest {
    int count = INT_MAX;
    long index = -1;
    Rotation rot;
  };
  std::vector<ChunkBest> bests(static_cast<std::size_t>(n_chunks));
  // Earliest sample index known to leave zero caps unlit; chunks that start
  // after it cannot contain the winner and are skipped.  This only prunes
  // work, so the result stays identical for any thread count.
  std::atomic<long> zero_at{LONG_MAX};

  auto run_chunk = [&](long ci) {
    const long lo = ci * kChunk;
    const long hi = std::min(budget, lo + kChunk);
    if (lo > zero_at.load(std::memory_order_relaxed)) return;
    Rng rng(chunk_seed(seed, static_cast<std::uint64_t>(ci)));
    ChunkBest best;
    for (long g = lo; g < hi; ++g) {
      Rotation rot = rng.rotation();
      Vec3 d[4];
      for (int j = 0; j < 4; ++j) d[j] = rot.apply(tetra[j].vec());
      int count = 0;
      for (std::size_t i = 0; i < m && count < best.count; ++i) {
        bool lit = false;
        for (int j = 0; j < 4; ++j) {
          if (dot(centers[i], d[j]) < -sin_r[i]) {
            lit = true;
            break;
          }
        }
        if (!lit) ++count;
      }
      if (count < best.count) {
        best = {count, g, rot};
        if (count == 0) {
          long prev = zero_at.load(std::memory_order_relaxed);
          while (g < prev &&
                 !zero_at.compare_exchange_weak(prev, g,
                                                std::memory_order_relaxed)) {
          }
          break;  // nothing in this chunk can beat an earlier zero
        }
      }
    }
    bests[static_cast<std::size_t>(ci)] = best;
  };

  if (threads <= 1 || n_chunks == 1) {
    for (long ci = 0; ci < n_chunks; ++ci) run_chunk(ci);
  } else {
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    for (int wkr = 0; wkr < threads; ++wkr) {
      pool.emplace_back([&] {
        for (;;) {
          long ci = next.fetch_add(1);
          if (ci >= n_chunks) return;
          run_chunk(ci);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  ChunkBest winner;
  for (const ChunkBest& cb : bests) {
    if (cb.index < 0) continue;
    if (cb.count < winner.count ||
        (cb.count == winner.count && cb.index < winner.index)) {
      winner = cb;
    }
  }
  if (winner.index < 0) {
    throw Error("rotation search evaluated no samples");
  }
  if (winner.count > 2) {
    throw SearchExhausted(
        "no sampled rotation left <= 2 caps unlit (budget " +
        std::to_string(budget) + "); retry with a larger budget");
  }

  DirectionSet ds;
  for (const UnitVector& v : tetra) ds.directions.push_back(winner.rot.apply(v));
  return {winner.rot, unlit_caps(body, ds)};
}

DirectionSet illuminate(const CapBody& body, long budget, std::uint64_t seed,
                        int threads) {
  RotationSearchResult found = search_rotation(body, budget, seed, threads);
  DirectionSet ds;
  for (const UnitVector& v : tetrahedron()) {
    ds.directions.push_back(found.rotation.apply(v));
  }
  // Complete with the antipodal center of each unlit cap: phi < pi/2 means
  // sin(phi) < 1, so <center, -center> = -1 < -sin(phi) always illuminates.
  for (int idx : found.unlit) {
    ds.directions.push_back(-body.caps()[static_cast<std::size_t>(idx)].center);
  }
  IlluminationReport rep = verify_illumination(body, ds);
  if (!rep.illuminated) {
    throw VerificationFailed("completed direction set failed verification");
  }
  return ds;
}

IlluminationReport verify_illumination(const CapBody& body,
                                       const DirectionSet& dirs) {
  IlluminationReport rep;
  for (std::size_t i = 0; i < body.size(); ++i) {
    CapAssignment as;
    as.cap_index = static_cast<int>(i);
    for (std::size_t j = 0; j < dirs.directions.size(); ++j) {
      if (cap_illuminated_by(body.caps()[i], dirs.directions[j])) {
        as.direction_index = static_cast<int>(j);
        break;
      }
    }
    if (as.direction_index < 0) rep.unlit.push_back(static_cast<int>(i));
    rep.per_cap.push_back(as);
  }
  rep.hull_ok = positive_hull_spans(dirs);
  rep.illuminated = rep.unlit.empty() && rep.hull_ok;
  return rep;
}

}  // namespace capb
