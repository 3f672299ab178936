#include "netspace/coefficient_net.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace netspace {

CoefficientNet::CoefficientNet(const Lattice& lat) : lattice_(&lat) {
  matrices_.reserve(lat.size());
  for (const LatticeElement& e : lat.elements()) {
    matrices_.emplace_back(Eigen::MatrixXcd::Zero(e.kappa, e.delta));
  }
}

CoefficientNet::CoefficientNet(const Lattice& lat,
                               std::vector<Eigen::MatrixXcd> matrices)
    : lattice_(&lat), matrices_(std::move(matrices)) {
  if (matrices_.size() != lat.size()) {
    throw std::invalid_argument("coefficient net size mismatch with lattice");
  }
  for (const LatticeElement& e : lat.elements()) {
    const auto& m = matrices_[static_cast<std::size_t>(e.id)];
    if (m.rows() != e.kappa || m.cols() != e.delta) {
      throw std::invalid_argument("matrix shape mismatch at element " +
                                  e.label + ": expected " +
                                  std::to_string(e.kappa) + "x" +
                                  std::to_string(e.delta));
    }
  }
}

const Eigen::MatrixXcd& CoefficientNet::matrix(ElementId id) const {
  lattice_->element(id);
  return matrices_[static_cast<std::size_t>(id)];
}

Eigen::MatrixXcd& CoefficientNet::matrix(ElementId id) {
  lattice_->element(id);
  return matrices_[static_cast<std::size_t>(id)];
}

bool CoefficientNet::is_zero() const {
  for (const auto& m : matrices_) {
    if (m.squaredNorm() != 0.0) return false;
  }
  return true;
}

bool CoefficientNet::is_real(double tol) const {
  double scale = 0.0;
  double max_imag = 0.0;
  for (const auto& m : matrices_) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        scale = std::max(scale, std::abs(m(r, c)));
        max_imag = std::max(max_imag, std::abs(m(r, c).imag()));
      }
    }
  }
  return max_imag <= tol * std::max(scale, 1.0);
}

nlohmann::json CoefficientNet::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const LatticeElement& e : lattice_->elements()) {
    const auto& m = matrices_[static_cast<std::size_t>(e.id)];
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        row.push_back({m(r, c).real(), m(r, c).imag()});
      }
      rows.push_back(std::move(row));
    }
    j[e.label] = std::move(rows);
  }
  return j;
}

CoefficientNet CoefficientNet::from_json(const Lattice& lat,
                                         const nlohmann::json& j) {
  CoefficientNet net(lat);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const ElementId id = lat.find_label(it.key());
    if (id < 0) {
      throw std::domain_error("unknown element label " + it.key());
    }
    Eigen::MatrixXcd& m = net.matrix(id);
    const auto& rows = it.value();
    if (static_cast<Eigen::Index>(rows.size()) != m.rows()) {
      throw std::invalid_argument("row count mismatch at " + it.key());
    }
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      const auto& row = rows[static_cast<std::size_t>(r)];
      if (static_cast<Eigen::Index>(row.size()) != m.cols()) {
        throw std::invalid_argument("column count mismatch at " + it.key());
      }
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        const auto& cell = row[static_cast<std::size_t>(c)];
        m(r, c) = {cell.at(0).get<double>(), cell.at(1).get<double>()};
      }
    }
  }
  return net;
}

namespace {

template <typename Op>
CoefficientNet combine(const CoefficientNet& a, const CoefficientNet& b,
                       Op op) {
  if (&a.lattice() != &b.lattice()) {
    throw std::invalid_argument("coefficient nets live on different lattices");
  }
  CoefficientNet out(a.lattice());
  for (const LatticeElement& e : a.lattice().elements()) {
    out.matrix(e.id) = op(a.matrix(e.id), b.matrix(e.id));
  }
  return out;
}

}  // namespace

CoefficientNet operator+(const CoefficientNet& a, const CoefficientNet& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}

CoefficientNet operator-(const CoefficientNet& a, const CoefficientNet& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}

CoefficientNet operator*(std::complex<double> c, const CoefficientNet& f) {
  CoefficientNet out(f.lattice());
  for (const LatticeElement& e : f.lattice().elements()) {
    out.matrix(e.id) = c * f.matrix(e.id);
  }
  return out;
}

}  // namespace netspace
