use std::io::{BufRead, BufReader, Write};
use std::net::TcpListener;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use hateful::harness::{fetch_bfile, CachePolicy, FetchConfig, HarnessError};

/// Serves `body` for every GET and counts requests.
fn serve(body: &'static str, status: &'static str) -> (String, Arc<AtomicUsize>, Arc<std::sync::Mutex<Vec<String>>>) {
    let listener = TcpListener::bind("127.0.0.1:0").unwrap();
    let addr = listener.local_addr().unwrap();
    let hits = Arc::new(AtomicUsize::new(0));
    let paths = Arc::new(std::sync::Mutex::new(Vec::new()));
    let (h, p) = (hits.clone(), paths.clone());
    std::thread::spawn(move || {
        for stream in listener.incoming() {
            let mut stream = stream.unwrap();
            let mut reader = BufReader::new(stream.try_clone().unwrap());
            let mut request_line = String::new();
            reader.read_line(&mut request_line).unwrap();
            loop {
                let mut line = String::new();
                if reader.read_line(&mut line).unwrap() == 0 || line == "\r\n" {
                    break;
                }
            }
            h.fetch_add(1, Ordering::SeqCst);
            p.lock().unwrap().push(request_line.split_whitespace().nth(1).unwrap_or("").to_string());
            write!(
                stream,
                "HTTP/1.1 {status}\r\nContent-Type: text/plain\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{body}",
                body.len()
            )
            .unwrap();
        }
    });
    (format!("http://{addr}"), hits, paths)
}

#[test]
fn downloads_once_then_serves_from_cache() {
    let (url, hits, paths) = serve("# header\r\n1 1\r\n2 4\r\n3 5\r\n", "200 OK");
    let dir = tempfile::tempdir().unwrap();
    let config = FetchConfig { base_url: url, cache_dir: dir.path().join("c"), policy: CachePolicy::PreferCache, network: true };
    let a = "A094004".parse().unwrap();

    let threads: Vec<_> = (0..4)
        .map(|_| {
            let config = config.clone();
            std::thread::spawn(move || fetch_bfile(a, &config).unwrap())
        })
        .collect();
    for t in threads {
        let r = t.join().unwrap();
        assert_eq!((r.offset, r.terms.len()), (1, 3));
    }
    assert_eq!(hits.load(Ordering::SeqCst), 1);
    assert_eq!(paths.lock().unwrap()[0], "/A094004/b094004.txt");
    assert!(dir.path().join("c/b094004.txt").exists());

    let offline = FetchConfig { policy: CachePolicy::Offline, ..config.clone() };
    assert_eq!(fetch_bfile(a, &offline).unwrap().terms[2], 5.into());

    let refresh = FetchConfig { policy: CachePolicy::Refresh, ..config };
    fetch_bfile(a, &refresh).unwrap();
    assert_eq!(hits.load(Ordering::SeqCst), 2);
}

#[test]
fn http_errors_surface() {
    let (url, _, _) = serve("nope", "404 Not Found");
    let dir = tempfile::tempdir().unwrap();
    let config = FetchConfig { base_url: url, cache_dir: dir.path().to_path_buf(), policy: CachePolicy::Refresh, network: true };
    let err = fetch_bfile("A000001".parse().unwrap(), &config).unwrap_err();
    assert!(matches!(err, HarnessError::Http { .. }), "{err}");
    assert!(!dir.path().join("b000001.txt").exists());
}
