#pragma once

#include <string>
#include <vector>

namespace sullivan {

/// Minimal streaming JSON writer. Fields appear exactly in emission order,
/// which keeps `--json` output byte-identical across runs.
class JsonWriter {
public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(const std::string& s);
  JsonWriter& value(const char* s);
  JsonWriter& value(long long n);
  JsonWriter& value(int n);
  JsonWriter& value(bool b);
  JsonWriter& null();
  JsonWriter& raw(const std::string& text);  // preformatted JSON fragment

  std::string str() const { return out_; }

  static std::string escape(const std::string& s);

private:
  void comma();
  std::string out_;
  std::vector<bool> first_in_scope_;
  bool pending_key_ = false;
};

}  // namespace sullivan
