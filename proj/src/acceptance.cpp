namespace holder {}
