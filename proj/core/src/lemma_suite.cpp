#include "ellbott/lemma_suite.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "ellbott/localgeom.hpp"

namespace ellbott {

bool LemmaSuiteResult::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

unsigned LemmaSuiteResult::passed() const {
  unsigned n = 0;
  for (const auto& c : checks) n += c.pass ? 1 : 0;
  return n;
}

unsigned LemmaSuiteResult::failed() const {
  return static_cast<unsigned>(checks.size()) - passed();
}

namespace {

std::string degrees_str(const std::vector<unsigned>& degrees) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < degrees.size(); ++i) {
    if (i) os << ",";
    os << degrees[i];
  }
  os << ")";
  return os.str();
}

void check_jacobian(LemmaSuiteResult& out, const KodairaType& type, unsigned expected) {
  const LocalEquation eq = local_model(type);
  LemmaCheck c;
  c.name = "critical-scheme degree of " + eq.label + " model " + eq.f.str();
  c.expected = std::to_string(expected);
  try {
    const unsigned got = jacobian_scheme_degree(eq);
    c.got = std::to_string(got);
    c.pass = got == expected;
  } catch (const std::exception& e) {
    c.got = e.what();
    c.pass = false;
  }
  out.checks.push_back(std::move(c));
}

void check_restriction(LemmaSuiteResult& out, const KodairaType& type,
                       std::vector<unsigned> degrees) {
  const unsigned r = std::accumulate(degrees.begin(), degrees.end(), 0u);
  const unsigned target = singular_scheme_degree(type) * type.singular_points();
  // The only non-surjective rows are the boundary cases II at r = 1,
  // III at (1, 1) and IV at (1, 1, 1); there the image misses exactly one
  // dimension, rank = r = target - 1.
  const bool expect_surjective = r >= target;
  const unsigned expect_rank = expect_surjective ? target : r;

  LemmaCheck c;
  c.name = "restriction " + type.str() + " degrees " + degrees_str(degrees);
  std::ostringstream expected;
  expected << "h0_fiber=" << r << " h0_s0=" << target << " rank=" << expect_rank
           << (expect_surjective ? " surjective" : " not surjective");
  c.expected = expected.str();
  try {
    const RestrictionRank rr = restriction_rank(SectionSpaceModel{type, std::move(degrees)});
    std::ostringstream got;
    got << "h0_fiber=" << rr.h0_fiber << " h0_s0=" << rr.h0_s0 << " rank=" << rr.rank
        << (rr.surjective() ? " surjective" : " not surjective");
    c.got = got.str();
    c.pass = c.got == c.expected;
  } catch (const std::exception& e) {
    c.got = e.what();
    c.pass = false;
  }
  out.checks.push_back(std::move(c));
}

void for_each_split(unsigned components, unsigned max_degree,
                    const std::function<void(std::vector<unsigned>)>& fn) {
  std::vector<unsigned> degrees(components, 1);
  while (true) {
    fn(degrees);
    unsigned i = 0;
    while (i < components && degrees[i] == max_degree) {
      degrees[i] = 1;
      ++i;
    }
    if (i == components) return;
    ++degrees[i];
  }
}

}  // namespace

LemmaSuiteResult run_lemma_suite(unsigned max_components, unsigned max_degree) {
  LemmaSuiteResult out;
  if (max_components < 1 || max_degree < 1) return out;

  // critical-scheme degrees of the local models
  check_jacobian(out, KodairaType::In(1), 1);
  check_jacobian(out, KodairaType::II(), 2);
  if (max_components >= 2) check_jacobian(out, KodairaType::III(), 3);
  if (max_components >= 3) check_jacobian(out, KodairaType::IV(), 4);
  if (max_components >= 2) check_jacobian(out, KodairaType::In(2), 1);

  // restriction ranks
  for (unsigned r = 1; r <= max_degree; ++r) {
    check_restriction(out, KodairaType::II(), {r});
  }
  if (max_components >= 2) {
    for_each_split(2, max_degree, [&](std::vector<unsigned> d) {
      check_restriction(out, KodairaType::III(), std::move(d));
    });
  }
  if (max_components >= 3) {
    for_each_split(3, max_degree, [&](std::vector<unsigned> d) {
      check_restriction(out, KodairaType::IV(), std::move(d));
    });
  }
  const unsigned cycle_max_degree = std::min(3u, max_degree);
  for (unsigned n = 1; n <= max_components; ++n) {
    for_each_split(n, cycle_max_degree, [&](std::vector<unsigned> d) {
      check_restriction(out, KodairaType::In(n), std::move(d));
    });
  }
  return out;
}

}  // namespace ellbott
