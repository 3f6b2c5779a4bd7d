import pandas as pd
import matplotlib.pyplot as plt

cars = pd.read_csv("data/cars.csv")
means = cars.groupby("year")["mpg"].mean()
fig, ax = plt.subplots()
ax.plot(means.index, means.values)
ax.set_xlabel("year")
ax.set_ylabel("mean mpg")
plt.show()
