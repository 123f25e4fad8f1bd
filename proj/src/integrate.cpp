namespace hlog {}
