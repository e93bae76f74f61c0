#pragma once

// HTTPS transport for OeisClient. Kept out of the umbrella header so that
// only programs which actually go online pull in httplib and OpenSSL.

#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include <string>

#include "seqproof/harness/oeis_client.hpp"

namespace seqproof {

inline Transport make_https_transport(int timeout_seconds = 30) {
  return [timeout_seconds](const std::string& url) -> std::string {
    const std::string scheme_end = "://";
    auto host_begin = url.find(scheme_end);
    if (host_begin == std::string::npos) throw NetworkUnavailable("bad url " + url);
    host_begin += scheme_end.size();
    auto path_begin = url.find('/', host_begin);
    const std::string base = url.substr(0, path_begin);
    const std::string path = path_begin == std::string::npos ? "/" : url.substr(path_begin);

    httplib::Client client(base);
    client.set_connection_timeout(timeout_seconds);
    client.set_read_timeout(timeout_seconds);
    client.set_follow_location(true);
    auto res = client.Get(path);
    if (!res) throw NetworkUnavailable(url + ": " + httplib::to_string(res.error()));
    if (res->status != 200) throw NetworkUnavailable(url + ": HTTP " + std::to_string(res->status));
    return res->body;
  };
}

}  // namespace seqproof
